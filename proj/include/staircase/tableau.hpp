#pragma once

#include <functional>
#include <string>
#include <vector>

#include "staircase/bigint.hpp"
#include "staircase/partition.hpp"

namespace staircase {

// A filling of a Ferrers diagram with symbols from a fixed alphabet
// {1, ..., alphabet()}, strictly increasing along rows and down columns.
// The alphabet bound is stored explicitly; it is never inferred from the
// largest symbol actually used.
class Tableau {
 public:
  // fill[y-1][x-1] is the symbol in box (x, y); row lengths must match shape.
  Tableau(Partition shape, std::vector<std::vector<int>> fill, int alphabet);

  const Partition& shape() const { return shape_; }
  int alphabet() const { return alphabet_; }
  int at(long long x, long long y) const;
  const std::vector<std::vector<int>>& fill() const { return fill_; }

  std::vector<int> symbols() const;  // distinct symbols, ascending
  bool has_symbol(int s) const;
  std::vector<BoxCoord> boxes_of(int s) const;  // row-major order

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> fill_;
  int alphabet_ = 0;
};

Tableau transpose(const Tableau& t);

// True when equal symbols only occupy boxes whose diagonals are congruent
// mod k.
bool is_uniform(const Tableau& t, int k);

// Visits every k-uniform tableau on the shape with the given alphabet,
// exactly once, ordered lexicographically by the row-major reading of the
// fill.  Throws GuardExceeded when the shape has more than max_boxes boxes.
void for_each_uniform(const Partition& shape, int k, int alphabet,
                      const std::function<void(const Tableau&)>& visit,
                      long long max_boxes = 16);

std::vector<Tableau> enumerate_uniform(const Partition& shape, int k,
                                       int alphabet, long long max_boxes = 16);

// A saturated chain in the displacement order, encoded bottom-up: starting
// from the empty partition, step j adds every outside corner in diagonal
// class residues[j].  Each step must add at least one box.
struct MaximalChain {
  int k = 2;
  std::vector<int> residues;

  friend auto operator<=>(const MaximalChain&, const MaximalChain&) = default;
};

// The partitions along a chain, from empty to the top; validates growth.
std::vector<Partition> chain_partitions(const MaximalChain& chain);

// Labels the j-th step of the chain with the j-th smallest chosen symbol:
// boxes added at step j receive symbols[j-1].  The result is k-uniform with
// exactly chain-length many distinct symbols.
Tableau phi(const std::vector<int>& symbols, const MaximalChain& chain,
            int alphabet);

// Rebuilds a tableau on a k-core shape so that every symbol's boxes fill a
// whole corner class: repeatedly stamp the current largest symbol onto all
// inside corners of its diagonal class and strip that class.  The result is
// k-saturated, uses symbols of the input only, and keeps each surviving
// symbol on its original diagonal class.
Tableau saturate(const Tableau& t, int k);

// True when the level sets of the tableau's symbols form a chain of k-cores,
// i.e. the tableau arises from a maximal chain via phi.
bool is_saturated(const Tableau& t, int k);

// Replaces the given boxes of the present symbol `outgoing` with the absent
// symbol `incoming`.  `outgoing` must be the nearest present symbol above or
// below `incoming`; the caller picks the direction by picking `outgoing`.
// Replacing all of its boxes keeps the distinct-symbol count; replacing a
// proper nonempty subset increases it by one.
Tableau swap_in(const Tableau& t, int incoming, int outgoing,
                const std::vector<BoxCoord>& boxes);

// Shifts the symbol out of the tableau toward the nearest absent symbol of
// the alphabet (ties resolved toward the smaller side): every present symbol
// strictly between them moves one step over.  Throws when no symbol of the
// alphabet is absent.
Tableau cycle_out(const Tableau& t, int symbol);

// Number of standard fillings of a rows-by-cols rectangle: the product
// formula (rows*cols)! * prod_{j=0}^{cols-1} j! / (rows+j)!.
BigInt hook_length_count(long long rows, long long cols);

// Text format: one row per line, symbols separated by single spaces.  When
// alphabet is zero the bound is taken to be the largest symbol present.
Tableau parse_tableau(const std::string& text, int alphabet = 0);
std::string to_text(const Tableau& t);

}  // namespace staircase
