#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "staircase/bigint.hpp"
#include "staircase/splitting.hpp"
#include "staircase/tableau.hpp"

namespace staircase {

// A chain of g loops whose first and last k-1 loops have generic edge
// lengths and whose middle loops all have torsion k.  Only the discrete data
// (genus, gonality, torsion profile) is modeled; edge lengths never enter
// the combinatorics.
class ChainOfLoops {
 public:
  ChainOfLoops(long long genus, int gonality);  // requires 2 <= k <= g

  long long genus() const { return genus_; }
  int gonality() const { return gonality_; }

  // Torsion order of loop j (1-based): 0 for the generic outer loops,
  // k for the middle ones.
  int torsion_order(long long j) const;
  std::vector<int> torsion_profile() const;  // length genus()

 private:
  long long genus_ = 0;
  int gonality_ = 0;
};

// Slopes of the distinguished gonality pencil: 0 on loops j <= g - k + 1 and
// k afterwards.
std::vector<long long> gonality_profile(const ChainOfLoops& graph);

// A coordinate subtorus of the degree-d Picard torus of the graph: each
// constrained symbol (loop index) is pinned to a residue mod k.
class Torus {
 public:
  Torus(long long genus, int modulus, long long degree,
        std::map<int, int> constraints);

  long long genus() const { return genus_; }
  int modulus() const { return modulus_; }
  long long degree() const { return degree_; }
  const std::map<int, int>& constraints() const { return constraints_; }
  long long dimension() const;

  friend auto operator<=>(const Torus&, const Torus&) = default;

 private:
  long long genus_ = 0;
  int modulus_ = 0;
  long long degree_ = 0;
  std::map<int, int> constraints_;
};

// The integer slope coordinate of a box (x, y) holding the given symbol:
// y - x when the symbol indexes a loop on the torsion-free tail
// (symbol <= g - k + 1), otherwise y - x + m*k with m minimal such that
// x <= x_m(mu).  Its residue mod k always equals (y - x) mod k.
long long xi_value(const SplittingType& mu, const ChainOfLoops& graph,
                   long long x, long long y, int symbol);

// The torus cut out by a k-uniform tableau on the staircase of mu: symbol j
// is pinned to the residue of the slope value of its boxes.  The tableau's
// alphabet must equal the genus and its shape the staircase.
Torus torus_from_tableau(const Tableau& t, const ChainOfLoops& graph,
                         const SplittingType& mu);

// Containment of coordinate subtori: outer contains inner iff every
// constraint of outer appears in inner.  Throws on genus/modulus/degree
// mismatch.
bool torus_contains(const Torus& outer, const Torus& inner);

// The splitting-type locus: every torus obtained from a saturated tableau,
// i.e. from a choice of magnitude(mu) symbols and a maximal chain.  Tori are
// ordered by symbol subset (colexicographic) and then by chain enumeration
// order.  Empty exactly when the genus is smaller than magnitude(mu).
struct SplittingLocus {
  SplittingType mu;
  ChainOfLoops graph;
  std::vector<std::pair<Tableau, Torus>> tori;
};

// Streams the tori of the locus without materializing them.
void for_each_locus_torus(
    const SplittingType& mu, const ChainOfLoops& graph,
    const std::function<void(const Tableau&, const Torus&)>& visit);

// Materializes the locus; throws GuardExceeded when the torus count
// binomial(g, magnitude) * alpha exceeds max_tori.
SplittingLocus splitting_locus(const SplittingType& mu,
                               const ChainOfLoops& graph,
                               const BigInt& max_tori = BigInt(100000));

// g - magnitude(mu) when the locus is nonempty, nullopt when it is empty.
std::optional<long long> locus_dimension(const SplittingLocus& locus);

// Number of distinct constraint maps; defined only in the zero-dimensional
// regime g == magnitude(mu), anything else throws.
BigInt locus_cardinality(const SplittingLocus& locus);

// Builds the graph whose vertices are the tori of the locus, with an edge
// when two tori's merged constraints are consistent and pin exactly
// magnitude(mu) + 1 symbols, and reports whether it is connected.  Defined
// only in the positive-dimensional regime g > magnitude(mu).
bool connectivity_check(const SplittingLocus& locus);

// Schema: {mu, g, k, dimension, cardinality?, tori: [{tableau,
// constraints}]}.  dimension is null for an empty locus; cardinality is
// present only when g == magnitude(mu).
nlohmann::json locus_to_json(const SplittingLocus& locus);

}  // namespace staircase
