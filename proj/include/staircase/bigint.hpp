#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace staircase {

// All counts in this library are exact.  Several of the closed-form families
// grow exponentially, so every counting entry point returns an
// arbitrary-precision integer rather than a machine word.
using BigInt = boost::multiprecision::cpp_int;

// n! for n >= 0.
BigInt factorial(long long n);

// Binomial coefficient C(n, r) for n >= 0; zero when r < 0 or r > n.
BigInt binomial(long long n, long long r);

// Fibonacci numbers seeded F(0) = F(1) = 1, so F(5) = 8.  The gonality-five
// chain counts follow this indexing.
BigInt fibonacci(long long n);

// Catalan number C(2n, n) / (n + 1) for n >= 0.
BigInt catalan(long long n);

// base^exp for exp >= 0.
BigInt power(const BigInt& base, long long exp);

}  // namespace staircase
