#pragma once

#include <optional>
#include <string>
#include <vector>

#include "staircase/partition.hpp"

namespace staircase {

// A splitting type: a weakly increasing tuple of k >= 2 integers.  The
// constructor sorts its input, so callers may pass entries in any order.
class SplittingType {
 public:
  explicit SplittingType(std::vector<long long> entries);

  int k() const { return static_cast<int>(entries_.size()); }
  long long operator[](int i) const { return entries_.at(i); }  // 0-based
  const std::vector<long long>& entries() const { return entries_; }
  long long sum() const;

  std::string to_string() const;  // e.g. "(-3,-1,1)"

  friend auto operator<=>(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<long long> entries_;
};

// Parses a comma-separated tuple such as "-3,-1,1".
SplittingType parse_splitting_type(const std::string& text);

// Section/cosection counts of the twist by m: x counts entries with
// mu_i + m + 1 > 0 (with multiplicity), y the complementary defect.
struct HInvariants {
  long long x = 0;
  long long y = 0;
};
HInvariants h_invariants(const SplittingType& mu, long long m);

// Sum of max{0, mu_j - mu_i - 1} over pairs i < j.  This equals the rank
// rho of the staircase below and the expected codimension of the locus.
long long magnitude(const SplittingType& mu);

// Degree of a divisor with this splitting type on a genus-g graph.
long long degree(const SplittingType& mu, long long genus);

// The staircase partition of mu: the union of the x_m-by-y_m rectangles over
// the contributing twist window.
Partition staircase(const SplittingType& mu);

// First differences alpha_m = x_m - x_{m-1} over the contributing window.
// A jump is strict when x_{m-1} > 0 and y_m > 0.
struct RankJump {
  long long m = 0;
  long long alpha = 0;
  bool strict = false;
};
std::vector<RankJump> rank_jumps(const SplittingType& mu);

// The splitting type whose staircase is the staircase of mu with its first
// row deleted; empty when the staircase itself is empty.
std::optional<SplittingType> first_row_deleted(const SplittingType& mu);

// Likewise with the leftmost column deleted.
std::optional<SplittingType> first_column_deleted(const SplittingType& mu);

// (-mu_k, ..., -mu_1); its staircase is the transpose of the staircase of mu.
SplittingType serre_dual(const SplittingType& mu);

// Dominance order: prefix sums of a never exceed those of b.  Defined only
// for equal length and equal total sum; anything else throws.
bool dominance_leq(const SplittingType& a, const SplittingType& b);

// The diagonal class (mod k) containing every inside corner of the staircase.
int corner_diagonal(const SplittingType& mu);

// Column-height vector of the staircase, computed in closed form from mu.
CVector c_vector(const SplittingType& mu);

}  // namespace staircase
