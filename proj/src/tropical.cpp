#include "staircase/tropical.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "staircase/errors.hpp"
#include "staircase/poset.hpp"

namespace staircase {

ChainOfLoops::ChainOfLoops(long long genus, int gonality)
    : genus_(genus), gonality_(gonality) {
  if (gonality < 2)
    throw std::invalid_argument("chain of loops needs gonality at least 2");
  if (genus < gonality)
    throw std::invalid_argument(
        "chain of loops needs genus at least the gonality");
}

int ChainOfLoops::torsion_order(long long j) const {
  if (j < 1 || j > genus_)
    throw std::out_of_range("loop index outside 1..genus");
  if (j < gonality_ || j > genus_ - gonality_ + 1) return 0;
  return gonality_;
}

std::vector<int> ChainOfLoops::torsion_profile() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (long long j = 1; j <= genus_; ++j) out.push_back(torsion_order(j));
  return out;
}

std::vector<long long> gonality_profile(const ChainOfLoops& graph) {
  std::vector<long long> out;
  out.reserve(static_cast<std::size_t>(graph.genus()));
  for (long long j = 1; j <= graph.genus(); ++j)
    out.push_back(j <= graph.genus() - graph.gonality() + 1 ? 0
                                                            : graph.gonality());
  return out;
}

Torus::Torus(long long genus, int modulus, long long degree,
             std::map<int, int> constraints)
    : genus_(genus),
      modulus_(modulus),
      degree_(degree),
      constraints_(std::move(constraints)) {
  if (genus_ < 0) throw std::invalid_argument("torus genus must be nonnegative");
  if (modulus_ < 2) throw std::invalid_argument("torus modulus must be >= 2");
  for (const auto& [symbol, residue] : constraints_) {
    if (symbol < 1 || symbol > genus_)
      throw std::invalid_argument("constrained symbol outside 1..genus");
    if (residue < 0 || residue >= modulus_)
      throw std::invalid_argument("constraint residue outside 0..modulus-1");
  }
}

long long Torus::dimension() const {
  return genus_ - static_cast<long long>(constraints_.size());
}

long long xi_value(const SplittingType& mu, const ChainOfLoops& graph,
                   long long x, long long y, int symbol) {
  if (symbol < 1 || symbol > graph.genus())
    throw std::invalid_argument("symbol outside 1..genus");
  if (x < 1 || y < 1) throw std::invalid_argument("box coordinates are 1-based");
  if (symbol <= graph.genus() - graph.gonality() + 1) return y - x;
  const int k = mu.k();
  long long m = -2 - mu[k - 1];  // here x_m(mu) = 0 < x
  while (h_invariants(mu, m).x < x) ++m;
  return y - x + m * k;
}

Torus torus_from_tableau(const Tableau& t, const ChainOfLoops& graph,
                         const SplittingType& mu) {
  const int k = mu.k();
  if (graph.gonality() != k)
    throw std::invalid_argument("graph gonality must match the splitting type");
  if (t.shape() != staircase(mu))
    throw std::invalid_argument("tableau shape must be the staircase of mu");
  if (t.alphabet() != graph.genus())
    throw std::invalid_argument("tableau alphabet must equal the genus");
  if (!is_uniform(t, k))
    throw std::invalid_argument("tableau must be k-uniform");
  std::map<int, int> constraints;
  for (long long y = 1; y <= t.shape().num_rows(); ++y)
    for (long long x = 1; x <= t.shape().row(y); ++x)
      constraints[t.at(x, y)] =
          floor_mod(xi_value(mu, graph, x, y, t.at(x, y)), k);
  return Torus(graph.genus(), k, degree(mu, graph.genus()),
               std::move(constraints));
}

bool torus_contains(const Torus& outer, const Torus& inner) {
  if (outer.genus() != inner.genus() || outer.modulus() != inner.modulus() ||
      outer.degree() != inner.degree())
    throw std::invalid_argument("tori live on different Picard tori");
  for (const auto& [symbol, residue] : outer.constraints()) {
    const auto it = inner.constraints().find(symbol);
    if (it == inner.constraints().end() || it->second != residue) return false;
  }
  return true;
}

namespace {

// Size-n subsets of {1..limit} as ascending vectors, visited in
// colexicographic order.
void colex_subsets(int n, int limit,
                   const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> subset(static_cast<std::size_t>(n));
  std::function<void(int, int)> fill = [&](int need, int top) {
    if (need == 0) {
      visit(subset);
      return;
    }
    for (int value = need; value <= top; ++value) {
      subset[static_cast<std::size_t>(need - 1)] = value;
      fill(need - 1, value - 1);
    }
  };
  fill(n, limit);
}

}  // namespace

void for_each_locus_torus(
    const SplittingType& mu, const ChainOfLoops& graph,
    const std::function<void(const Tableau&, const Torus&)>& visit) {
  if (graph.gonality() != mu.k())
    throw std::invalid_argument("graph gonality must match the splitting type");
  const long long size = magnitude(mu);
  if (graph.genus() < size) return;  // empty locus
  const int g = static_cast<int>(graph.genus());
  const CVector root = c_vector(mu);
  colex_subsets(static_cast<int>(size), g, [&](const std::vector<int>& symbols) {
    for_each_maximal_chain(root, [&](const MaximalChain& chain) {
      const Tableau t = phi(symbols, chain, g);
      visit(t, torus_from_tableau(t, graph, mu));
    });
  });
}

SplittingLocus splitting_locus(const SplittingType& mu,
                               const ChainOfLoops& graph,
                               const BigInt& max_tori) {
  if (graph.gonality() != mu.k())
    throw std::invalid_argument("graph gonality must match the splitting type");
  const long long size = magnitude(mu);
  const BigInt expected = binomial(graph.genus(), size) *
                          count_maximal_chains(c_vector(mu));
  if (expected > max_tori) {
    std::ostringstream msg;
    msg << "locus guard exceeded: " << expected << " tori > " << max_tori;
    throw GuardExceeded(msg.str());
  }
  SplittingLocus locus{mu, graph, {}};
  for_each_locus_torus(mu, graph, [&locus](const Tableau& t, const Torus& torus) {
    locus.tori.emplace_back(t, torus);
  });
  return locus;
}

std::optional<long long> locus_dimension(const SplittingLocus& locus) {
  if (locus.tori.empty()) return std::nullopt;
  return locus.graph.genus() - magnitude(locus.mu);
}

BigInt locus_cardinality(const SplittingLocus& locus) {
  if (locus.graph.genus() != magnitude(locus.mu))
    throw std::domain_error(
        "cardinality is defined only when the genus equals the magnitude");
  std::set<std::map<int, int>> maps;
  for (const auto& [t, torus] : locus.tori) maps.insert(torus.constraints());
  return BigInt(maps.size());
}

bool connectivity_check(const SplittingLocus& locus) {
  if (locus.graph.genus() <= magnitude(locus.mu))
    throw std::domain_error(
        "connectivity is defined only when the genus exceeds the magnitude");
  const std::size_t n = locus.tori.size();
  if (n <= 1) return true;

  const long long target = magnitude(locus.mu) + 1;
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };

  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = locus.tori[i].second.constraints();
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& b = locus.tori[j].second.constraints();
      long long merged = static_cast<long long>(b.size());
      bool consistent = true;
      for (const auto& [symbol, residue] : a) {
        const auto it = b.find(symbol);
        if (it == b.end()) {
          ++merged;
        } else if (it->second != residue) {
          consistent = false;
          break;
        }
      }
      if (consistent && merged == target) parent[find(i)] = find(j);
    }
  }

  const std::size_t root = find(0);
  for (std::size_t i = 1; i < n; ++i)
    if (find(i) != root) return false;
  return true;
}

nlohmann::json locus_to_json(const SplittingLocus& locus) {
  nlohmann::json doc;
  doc["mu"] = locus.mu.entries();
  doc["g"] = locus.graph.genus();
  doc["k"] = locus.mu.k();
  const auto dim = locus_dimension(locus);
  if (dim)
    doc["dimension"] = *dim;
  else
    doc["dimension"] = nullptr;
  if (locus.graph.genus() == magnitude(locus.mu))
    doc["cardinality"] = locus_cardinality(locus).str();
  doc["tori"] = nlohmann::json::array();
  for (const auto& [t, torus] : locus.tori) {
    nlohmann::json constraints = nlohmann::json::object();
    for (const auto& [symbol, residue] : torus.constraints())
      constraints[std::to_string(symbol)] = residue;
    doc["tori"].push_back(
        {{"tableau", t.fill()}, {"constraints", std::move(constraints)}});
  }
  return doc;
}

}  // namespace staircase
