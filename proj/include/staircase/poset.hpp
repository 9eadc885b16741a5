#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "staircase/bigint.hpp"
#include "staircase/splitting.hpp"
#include "staircase/tableau.hpp"

namespace staircase {

// One downward cover move on a column-height vector: legal exactly when
// entry a-1 is strictly smaller than entry a, in which case entry a-1
// becomes (entry a) - 1, entry a becomes the old entry a-1, and the sum
// drops by one.  Throws when the move is illegal.
CVector cvec_downward(const CVector& c, long long a);

// Residues a for which the downward move is legal, ascending.
std::vector<int> cover_moves(const CVector& c);

// Lexicographically least cyclic rotation; chain counts are invariant under
// rotation, so this is the memoization key.
CVector canonical_rotation(const CVector& c);

// Thread-safe memoized evaluation of the chain-count recurrence
//   alpha(0) = 1,   alpha(c) = sum of alpha over the downward covers of c.
// Concurrent calls may duplicate work but never see inconsistent values.
class ChainCountCache {
 public:
  BigInt count(const CVector& c);

 private:
  std::optional<BigInt> lookup(const std::vector<long long>& key);
  void store(const std::vector<long long>& key, const BigInt& value);

  std::mutex mutex_;
  std::map<std::vector<long long>, BigInt> memo_;
};

// Number of maximal chains from c down to the zero vector, evaluated against
// a process-wide shared cache.
BigInt count_maximal_chains(const CVector& c);

// Visits every maximal chain below c exactly once.  Chains are produced by
// depth-first descent taking cover moves in ascending residue order; each is
// reported bottom-up (the residue sequence from the empty partition).
// Throws GuardExceeded when the chain count exceeds max_chains.
void for_each_maximal_chain(const CVector& c,
                            const std::function<void(const MaximalChain&)>& visit,
                            const BigInt& max_chains = BigInt(1000000));

std::vector<MaximalChain> enumerate_maximal_chains(
    const CVector& c, const BigInt& max_chains = BigInt(1000000));

// The full order ideal below a column-height vector, as a graded graph.
// Nodes are in breadth-first order from the root, children visited in
// ascending residue order; node 0 is the root and the zero vector is last.
struct HasseDiagram {
  int k = 2;
  std::vector<CVector> nodes;
  std::vector<long long> rank;   // entry sum per node
  std::vector<BigInt> alpha;     // chains from the node down to zero
  struct Edge {
    int from = 0;  // covering node (larger sum)
    int to = 0;    // covered node
    int residue = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };
  std::vector<Edge> edges;
};

HasseDiagram build_hasse(const CVector& root, long long max_nodes = 200000);

// Graphviz rendering with the root on top; nodes carry the vector and its
// chain count, edges the residue of the move.
std::string hasse_to_dot(const HasseDiagram& h);

// Schema: {k, root, nodes: [{cvec, rank, alpha}], edges: [{from, to,
// residue}]}.  Chain counts are decimal strings since they outgrow doubles.
nlohmann::json hasse_to_json(const HasseDiagram& h);

// ---------------------------------------------------------------------------
// Closed-form chain counts for the known families.  Each function validates
// its hypotheses and throws std::domain_error outside them.  The comments
// give the column-height vectors the formulas count.

// (z, 0, ..., 0) with k entries: a single chain.  z >= 0, k >= 2.
BigInt alpha_one_column(int k, long long z);

// k = 3 and mu strictly increasing: binomial(mu3 - mu1 - 2, mu2 - mu1 - 1).
BigInt alpha_trigonal(const SplittingType& mu);

// k = 4: both (z, z, 0, 0) and (z+1, z-1, 0, 0) count 2^(z-1).  z >= 1.
BigInt alpha_gonality_four(long long z);

// k = 5: (z, z, 0, 0, 0) counts F(2z-2) and (z+2, z-1, 0, 0, 0) counts
// F(2z-1), Fibonacci seeded F(0) = F(1) = 1.  z >= 1.
BigInt alpha_gonality_five(long long z, bool offset);

// k = 6, two-step jumps.  variant 0: (z, z, 0, 0, 0, 0) -> (3^(z-1)+1)/2;
// variant 1: (z+2, z-2, 0, 0, 0, 0) -> (3^(z-1)-1)/2, z >= 2;
// variant 2: (z+1, 0, 0, z-1, 0, 0) -> 3^(z-1).
BigInt alpha_gonality_six_jump2(long long z, int variant);

// k = 6, three-step jumps, with beta(z) = 2 when 3 | z and -1 otherwise.
// variant 0: (z, z, z, 0, 0, 0)       -> (2^(3z-2) + (-1)^z beta(z)) / 3;
// variant 1: (z+1, z+1, z-2, 0, 0, 0) -> (2^(3z-2) + (-1)^z beta(z-1)) / 3,
//            z >= 2;
// variant 2: (z+2, z-1, z-1, 0, 0, 0) -> (2^(3z-2) + (-1)^z beta(z+1)) / 3;
// variant 3: (z-1, 0, z, 0, z+1, 0)   -> 2^(3z-2).
BigInt alpha_gonality_six_jump3(long long z, int variant);

// Count for the vector with z1 inserted after position j of
// (z2 repeated k-2-i times, z2-1 repeated i times, 0):
// binomial(floor((k-2)(z1 + (k-2) z2) / (k-1)) - i, (k-2) z2 - i).
// The value does not depend on j, but only insertion positions passing
// one_row_one_column_applicable actually carry this count.  Hypotheses:
// z1 >= z2 >= 0, 0 <= i <= k-2, and z2 >= 1 whenever i > 0.
BigInt alpha_one_row_one_column(int k, long long z1, long long z2, long long i);

// Builds the insertion vector itself (k entries) for the family above.
// Defined for any j in [0, k-1] regardless of applicability.
CVector one_row_one_column_vector(int k, long long z1, long long z2,
                                  long long i, long long j);

// Whether the insertion position j is one that occurs for this family's
// column-height vectors, i.e. whether alpha_one_row_one_column counts the
// chains of one_row_one_column_vector(k, z1, z2, i, j).  Positions failing
// this test still yield well-defined vectors, but their chain counts can
// differ from the closed form.
bool one_row_one_column_applicable(int k, long long z1, long long z2,
                                   long long i, long long j);

// mu = (-3, -2 repeated k-3 times, 0, 0): catalan(k-1) - 1.  k >= 3.
BigInt alpha_catalan_type(int k);

// Standard fillings of a rectangle; alias of hook_length_count.
BigInt alpha_rectangle(long long rows, long long cols);

// Expected number of rank-4 quadrics through the generic canonical curve of
// gonality k: the two-row-bounded ballot-style product formula.  k >= 4.
BigInt rank4_quadric_count(int k);

}  // namespace staircase
