#pragma once

#include <compare>
#include <string>
#include <vector>

namespace staircase {

// Residue of v modulo k, always normalized into [0, k).  Diagonal indices and
// congruence-class arithmetic go through this helper so that negative inputs
// never leak implementation-defined remainders into the combinatorics.
int floor_mod(long long v, int k);

// A box of a Ferrers diagram in English convention: x is the column and y is
// the row, both 1-based, with y growing downward.
struct BoxCoord {
  long long x = 0;
  long long y = 0;
  friend auto operator<=>(const BoxCoord&, const BoxCoord&) = default;
};

// Diagonal congruence class (y - x) mod k of a box.
int diagonal_class(BoxCoord box, int k);

// An integer partition stored as its weakly decreasing row lengths.  (x, y)
// is a box of the diagram iff y <= num_rows() and x <= row(y).  Instances are
// immutable after construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long long> rows);

  const std::vector<long long>& rows() const { return rows_; }
  long long num_rows() const { return static_cast<long long>(rows_.size()); }
  long long num_cols() const { return rows_.empty() ? 0 : rows_.front(); }
  // Length of row y (1-based); zero when y exceeds the diagram.
  long long row(long long y) const;
  // Height of column x (1-based); zero when x exceeds the diagram.
  long long column_height(long long x) const;
  // Column heights for x = 1..num_cols(), i.e. the transposed row lengths.
  std::vector<long long> column_heights() const;
  bool contains(long long x, long long y) const;
  bool contains(BoxCoord box) const { return contains(box.x, box.y); }
  long long box_count() const;
  bool empty() const { return rows_.empty(); }

  std::string to_string() const;  // e.g. "[4,2,1,1]", "[]" when empty

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<long long> rows_;
};

// The two corner sets of a diagram.  An inside corner is a box whose removal
// leaves a partition; an outside corner is a non-box whose addition yields
// one.  Both lists are ordered by row.
struct Corners {
  std::vector<BoxCoord> inside;
  std::vector<BoxCoord> outside;
};
Corners corners(const Partition& p);

Partition transpose(const Partition& p);

// Adds every outside corner lying in diagonal class a (mod k).  Always yields
// a partition; the input is returned unchanged when the class has no outside
// corner.
Partition upward_displacement(const Partition& p, int k, long long a);

// Deletes every inside corner lying in diagonal class a (mod k).
Partition downward_displacement(const Partition& p, int k, long long a);

// Column-height vector of a partition with respect to a modulus k: entry a
// records the height of the tallest column whose last box lies in diagonal
// class a, or zero if there is none.
class CVector {
 public:
  explicit CVector(int k);  // zero vector
  explicit CVector(std::vector<long long> entries);

  int k() const { return static_cast<int>(entries_.size()); }
  // Entry in class a; the index is reduced mod k, so at(-1) is the last entry.
  long long at(long long a) const;
  const std::vector<long long>& entries() const { return entries_; }
  long long sum() const;
  bool is_zero() const;
  // Cyclic shift: rotated(r).at(a) == at(a + r).
  CVector rotated(int r) const;

  std::string to_string() const;  // e.g. "(4,1,0)"

  friend auto operator<=>(const CVector&, const CVector&) = default;

 private:
  std::vector<long long> entries_;
};

CVector c_vector(const Partition& p, int k);

// Sum of the column-height vector; the rank of p in the displacement order.
long long rho(const Partition& p, int k);

// The row-direction descent condition: every row-end box in diagonal class a
// must sit strictly below all columns counted by entry a-1 of the
// column-height vector.
bool satisfies_descent(const Partition& p, int k);

// A partition is a k-core exactly when it and its transpose both satisfy the
// descent condition; equivalently, when it is reachable from the empty
// partition by upward displacements.
bool is_core(const Partition& p, int k);

}  // namespace staircase
