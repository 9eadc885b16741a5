#include "staircase/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace staircase {

namespace {

void require_modulus(int k) {
  if (k < 2) throw std::invalid_argument("modulus k must be at least 2");
}

}  // namespace

int floor_mod(long long v, int k) {
  if (k < 1) throw std::invalid_argument("floor_mod with non-positive modulus");
  long long r = v % k;
  if (r < 0) r += k;
  return static_cast<int>(r);
}

int diagonal_class(BoxCoord box, int k) {
  require_modulus(k);
  return floor_mod(box.y - box.x, k);
}

Partition::Partition(std::vector<long long> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 1)
      throw std::invalid_argument("partition rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw std::invalid_argument("partition rows must be weakly decreasing");
  }
}

long long Partition::row(long long y) const {
  if (y < 1 || y > num_rows()) return 0;
  return rows_[static_cast<std::size_t>(y - 1)];
}

long long Partition::column_height(long long x) const {
  if (x < 1 || x > num_cols()) return 0;
  // Rows are weakly decreasing, so the rows of length >= x form a prefix.
  auto it = std::lower_bound(rows_.begin(), rows_.end(), x,
                             [](long long len, long long v) { return len >= v; });
  return static_cast<long long>(it - rows_.begin());
}

std::vector<long long> Partition::column_heights() const {
  std::vector<long long> heights;
  heights.reserve(static_cast<std::size_t>(num_cols()));
  long long remaining = num_rows();
  for (long long x = 1; x <= num_cols(); ++x) {
    while (remaining > 0 && rows_[static_cast<std::size_t>(remaining - 1)] < x)
      --remaining;
    heights.push_back(remaining);
  }
  return heights;
}

bool Partition::contains(long long x, long long y) const {
  return x >= 1 && y >= 1 && y <= num_rows() &&
         x <= rows_[static_cast<std::size_t>(y - 1)];
}

long long Partition::box_count() const {
  return std::accumulate(rows_.begin(), rows_.end(), 0LL);
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) out << ',';
    out << rows_[i];
  }
  out << ']';
  return out.str();
}

Corners corners(const Partition& p) {
  Corners c;
  const long long n = p.num_rows();
  for (long long y = 1; y <= n; ++y) {
    if (p.row(y + 1) < p.row(y)) c.inside.push_back({p.row(y), y});
  }
  for (long long y = 1; y <= n; ++y) {
    // (row(y)+1, y) is addable iff the row above is strictly longer (or this
    // is the first row).
    if (y == 1 || p.row(y - 1) > p.row(y)) c.outside.push_back({p.row(y) + 1, y});
  }
  c.outside.push_back({1, n + 1});
  return c;
}

Partition transpose(const Partition& p) {
  return Partition(p.column_heights());
}

Partition upward_displacement(const Partition& p, int k, long long a) {
  require_modulus(k);
  const int cls = floor_mod(a, k);
  std::vector<long long> rows = p.rows();
  for (const BoxCoord& box : corners(p).outside) {
    if (diagonal_class(box, k) != cls) continue;
    if (box.y <= p.num_rows()) {
      rows[static_cast<std::size_t>(box.y - 1)] += 1;
    } else {
      rows.push_back(1);
    }
  }
  return Partition(std::move(rows));
}

Partition downward_displacement(const Partition& p, int k, long long a) {
  require_modulus(k);
  const int cls = floor_mod(a, k);
  std::vector<long long> rows = p.rows();
  for (const BoxCoord& box : corners(p).inside) {
    if (diagonal_class(box, k) != cls) continue;
    rows[static_cast<std::size_t>(box.y - 1)] -= 1;
  }
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return Partition(std::move(rows));
}

CVector::CVector(int k) {
  require_modulus(k);
  entries_.assign(static_cast<std::size_t>(k), 0);
}

CVector::CVector(std::vector<long long> entries) : entries_(std::move(entries)) {
  require_modulus(static_cast<int>(entries_.size()));
  for (long long e : entries_) {
    if (e < 0)
      throw std::invalid_argument("column-height entries must be nonnegative");
  }
}

long long CVector::at(long long a) const {
  return entries_[static_cast<std::size_t>(floor_mod(a, k()))];
}

long long CVector::sum() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

bool CVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](long long e) { return e == 0; });
}

CVector CVector::rotated(int r) const {
  std::vector<long long> out(entries_.size());
  for (int a = 0; a < k(); ++a)
    out[static_cast<std::size_t>(a)] = at(a + r);
  return CVector(std::move(out));
}

std::string CVector::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out << ',';
    out << entries_[i];
  }
  out << ')';
  return out.str();
}

CVector c_vector(const Partition& p, int k) {
  require_modulus(k);
  std::vector<long long> entries(static_cast<std::size_t>(k), 0);
  const std::vector<long long> heights = p.column_heights();
  for (long long x = 1; x <= p.num_cols(); ++x) {
    const long long h = heights[static_cast<std::size_t>(x - 1)];
    const int cls = floor_mod(h - x, k);
    entries[static_cast<std::size_t>(cls)] =
        std::max(entries[static_cast<std::size_t>(cls)], h);
  }
  return CVector(std::move(entries));
}

long long rho(const Partition& p, int k) { return c_vector(p, k).sum(); }

bool satisfies_descent(const Partition& p, int k) {
  require_modulus(k);
  const CVector c = c_vector(p, k);
  for (long long y = 1; y <= p.num_rows(); ++y) {
    const long long x = p.row(y);  // row-end box (x, y)
    const int cls = floor_mod(y - x, k);
    if (c.at(cls - 1) >= y) return false;
  }
  return true;
}

bool is_core(const Partition& p, int k) {
  return satisfies_descent(p, k) && satisfies_descent(transpose(p), k);
}

}  // namespace staircase
