#include "staircase/splitting.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace staircase {

SplittingType::SplittingType(std::vector<long long> entries)
    : entries_(std::move(entries)) {
  if (entries_.size() < 2)
    throw std::invalid_argument("a splitting type needs at least two entries");
  std::sort(entries_.begin(), entries_.end());
}

long long SplittingType::sum() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

std::string SplittingType::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out << ',';
    out << entries_[i];
  }
  out << ')';
  return out.str();
}

SplittingType parse_splitting_type(const std::string& text) {
  std::vector<long long> entries;
  std::string field;
  std::istringstream in(text);
  while (std::getline(in, field, ',')) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(field, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid splitting type entry: '" + field + "'");
    }
    while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used])))
      ++used;
    if (used != field.size())
      throw std::invalid_argument("invalid splitting type entry: '" + field + "'");
    entries.push_back(value);
  }
  return SplittingType(std::move(entries));
}

HInvariants h_invariants(const SplittingType& mu, long long m) {
  HInvariants h;
  for (long long e : mu.entries()) {
    h.x += std::max(0LL, e + m + 1);
    h.y += std::max(0LL, -e - m - 1);
  }
  return h;
}

long long magnitude(const SplittingType& mu) {
  long long total = 0;
  const auto& e = mu.entries();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      total += std::max(0LL, e[j] - e[i] - 1);
  return total;
}

long long degree(const SplittingType& mu, long long genus) {
  if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
  return genus - 1 + mu.sum() + mu.k();
}

Partition staircase(const SplittingType& mu) {
  const long long lo = -1 - mu[mu.k() - 1];
  const long long hi = -1 - mu[0];
  std::vector<long long> rows;
  // Walking the twist window from the widest rectangle down: widths shrink
  // and heights grow, so each rectangle only extends the diagram downward.
  for (long long m = hi; m >= lo; --m) {
    const HInvariants h = h_invariants(mu, m);
    if (h.x <= 0 || h.y <= 0) continue;
    while (static_cast<long long>(rows.size()) < h.y) rows.push_back(h.x);
  }
  return Partition(std::move(rows));
}

std::vector<RankJump> rank_jumps(const SplittingType& mu) {
  const long long lo = -1 - mu[mu.k() - 1];
  const long long hi = -1 - mu[0];
  std::vector<RankJump> jumps;
  for (long long m = lo; m <= hi; ++m) {
    const HInvariants here = h_invariants(mu, m);
    const HInvariants prev = h_invariants(mu, m - 1);
    jumps.push_back({m, here.x - prev.x, prev.x > 0 && here.y > 0});
  }
  return jumps;
}

std::optional<SplittingType> first_row_deleted(const SplittingType& mu) {
  if (magnitude(mu) == 0) return std::nullopt;  // empty staircase
  std::vector<long long> e = mu.entries();
  std::size_t s = 0;
  while (s + 1 < e.size() && e[s] == e[s + 1]) ++s;
  e[s] += 1;
  return SplittingType(std::move(e));
}

std::optional<SplittingType> first_column_deleted(const SplittingType& mu) {
  if (magnitude(mu) == 0) return std::nullopt;
  std::vector<long long> e = mu.entries();
  std::size_t s = e.size() - 1;
  while (s > 0 && e[s] == e[s - 1]) --s;
  e[s] -= 1;
  return SplittingType(std::move(e));
}

SplittingType serre_dual(const SplittingType& mu) {
  std::vector<long long> e = mu.entries();
  for (long long& v : e) v = -v;
  return SplittingType(std::move(e));
}

bool dominance_leq(const SplittingType& a, const SplittingType& b) {
  if (a.k() != b.k())
    throw std::domain_error("dominance compares splitting types of equal length");
  if (a.sum() != b.sum())
    throw std::domain_error("dominance compares splitting types of equal total degree");
  long long pa = 0, pb = 0;
  for (int i = 0; i < a.k(); ++i) {
    pa += a[i];
    pb += b[i];
    if (pa > pb) return false;
  }
  return true;
}

int corner_diagonal(const SplittingType& mu) {
  return floor_mod(-mu.sum(), mu.k());
}

CVector c_vector(const SplittingType& mu) {
  const int k = mu.k();
  const int c = corner_diagonal(mu);
  std::vector<long long> entries(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    const long long m = -mu[k - 1 - i];
    entries[static_cast<std::size_t>(floor_mod(c + i, k))] =
        h_invariants(mu, m).y;
  }
  return CVector(std::move(entries));
}

}  // namespace staircase
