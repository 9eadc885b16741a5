#include "staircase/bigint.hpp"

#include <stdexcept>

namespace staircase {

BigInt factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt out = 1;
  for (long long i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(long long n, long long r) {
  if (n < 0) throw std::invalid_argument("binomial with negative upper index");
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt out = 1;
  for (long long i = 1; i <= r; ++i) {
    out *= (n - r + i);
    out /= i;  // exact: the running product is always a binomial coefficient
  }
  return out;
}

BigInt fibonacci(long long n) {
  if (n < 0) throw std::invalid_argument("fibonacci of a negative index");
  BigInt a = 1, b = 1;  // F(0), F(1)
  for (long long i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = b;
    b = next;
  }
  return a;
}

BigInt catalan(long long n) {
  if (n < 0) throw std::invalid_argument("catalan of a negative index");
  return binomial(2 * n, n) / (n + 1);
}

BigInt power(const BigInt& base, long long exp) {
  if (exp < 0) throw std::invalid_argument("power with negative exponent");
  BigInt out = 1, b = base;
  long long e = exp;
  while (e > 0) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

}  // namespace staircase
