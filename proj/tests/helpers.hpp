#pragma once

// Shared oracles for the test suites.  Everything here is deliberately
// independent of the library's own algorithms: corners are found by brute
// re-validation, cores by breadth-first reachability and by hook lengths,
// standard fillings by direct backtracking.  Slow is fine; these run on
// small inputs only.

#include <algorithm>
#include <set>
#include <vector>

#include "staircase/bigint.hpp"
#include "staircase/partition.hpp"
#include "staircase/splitting.hpp"

namespace staircase_test {

// All partitions with at most max_boxes boxes (the empty one included).
inline std::vector<staircase::Partition> all_partitions_up_to(int max_boxes) {
  std::vector<staircase::Partition> out;
  std::vector<long long> rows;
  auto rec = [&](auto&& self, long long budget, long long cap) -> void {
    out.emplace_back(rows);
    for (long long first = std::min(budget, cap); first >= 1; --first) {
      rows.push_back(first);
      self(self, budget - first, first);
      rows.pop_back();
    }
  };
  rec(rec, max_boxes, max_boxes);
  return out;
}

// Is the row vector a valid partition shape?
inline bool valid_rows(const std::vector<long long>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 1) return false;
    if (i + 1 < rows.size() && rows[i] < rows[i + 1]) return false;
  }
  return true;
}

// Corner scan that never looks at the library's corner logic: a box is an
// inside corner iff deleting it leaves a partition, an outside corner iff
// adding it yields one.
inline staircase::Corners corners_oracle(const staircase::Partition& p) {
  staircase::Corners result;
  const auto& rows = p.rows();
  const long long n = p.num_rows();
  for (long long y = 1; y <= n; ++y) {
    std::vector<long long> copy = rows;
    copy[static_cast<std::size_t>(y - 1)] -= 1;
    if (copy[static_cast<std::size_t>(y - 1)] == 0) {
      if (y != n) continue;  // an emptied row mid-shape leaves a hole
      copy.pop_back();
    }
    if (valid_rows(copy)) result.inside.push_back({p.row(y), y});
  }
  for (long long y = 1; y <= n + 1; ++y) {
    std::vector<long long> copy = rows;
    if (y <= n)
      copy[static_cast<std::size_t>(y - 1)] += 1;
    else
      copy.push_back(1);
    if (valid_rows(copy)) result.outside.push_back({p.row(y) + 1, y});
  }
  return result;
}

// The k-cores with at most max_boxes boxes, found by breadth-first search
// from the empty partition using upward displacements only.  This is the
// definition of "k-core"; the library's descent-based recognizer is the
// thing under test.
inline std::set<staircase::Partition> cores_by_reachability(int k,
                                                            int max_boxes) {
  std::set<staircase::Partition> seen;
  std::vector<staircase::Partition> frontier{staircase::Partition{}};
  seen.insert(staircase::Partition{});
  while (!frontier.empty()) {
    std::vector<staircase::Partition> next;
    for (const auto& p : frontier)
      for (int a = 0; a < k; ++a) {
        staircase::Partition up = staircase::upward_displacement(p, k, a);
        if (up == p || up.box_count() > max_boxes) continue;
        if (seen.insert(up).second) next.push_back(up);
      }
    frontier = std::move(next);
  }
  return seen;
}

// Third, fully independent core test: a partition is a k-core iff no box has
// hook length divisible by k.
inline bool is_core_by_hooks(const staircase::Partition& p, int k) {
  const auto heights = p.column_heights();
  for (long long y = 1; y <= p.num_rows(); ++y)
    for (long long x = 1; x <= p.row(y); ++x) {
      const long long arm = p.row(y) - x;
      const long long leg = heights[static_cast<std::size_t>(x - 1)] - y;
      if ((arm + leg + 1) % k == 0) return false;
    }
  return true;
}

// Number of standard fillings (each of 1..n exactly once, strictly
// increasing rows and columns) by direct backtracking.
inline staircase::BigInt syt_count_brute(const staircase::Partition& shape) {
  const long long n = shape.box_count();
  std::vector<long long> filled(static_cast<std::size_t>(shape.num_rows()), 0);
  auto rec = [&](auto&& self, long long symbol) -> staircase::BigInt {
    if (symbol > n) return 1;
    staircase::BigInt total = 0;
    for (std::size_t r = 0; r < filled.size(); ++r) {
      if (filled[r] >= shape.rows()[r]) continue;
      if (r > 0 && filled[r] >= filled[r - 1]) continue;
      filled[r] += 1;
      total += self(self, symbol + 1);
      filled[r] -= 1;
    }
    return total;
  };
  return rec(rec, 1);
}

// All splitting types of length k with entries drawn (weakly increasing)
// from [lo, hi].
inline std::vector<staircase::SplittingType> splitting_grid(int k, long long lo,
                                                            long long hi) {
  std::vector<staircase::SplittingType> out;
  std::vector<long long> entries;
  auto rec = [&](auto&& self, long long minimum) -> void {
    if (static_cast<int>(entries.size()) == k) {
      out.emplace_back(entries);
      return;
    }
    for (long long v = minimum; v <= hi; ++v) {
      entries.push_back(v);
      self(self, v);
      entries.pop_back();
    }
  };
  rec(rec, lo);
  return out;
}

}  // namespace staircase_test
