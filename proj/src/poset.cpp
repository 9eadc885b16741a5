#include "staircase/poset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "staircase/errors.hpp"

namespace staircase {

CVector cvec_downward(const CVector& c, long long a) {
  const int k = c.k();
  const int ia = floor_mod(a, k);
  const int ib = floor_mod(a - 1, k);
  if (c.at(ia - 1) >= c.at(ia))
    throw std::domain_error("no inside corner in the requested diagonal class");
  std::vector<long long> entries = c.entries();
  entries[static_cast<std::size_t>(ib)] = c.at(ia) - 1;
  entries[static_cast<std::size_t>(ia)] = c.at(ib);
  return CVector(std::move(entries));
}

std::vector<int> cover_moves(const CVector& c) {
  std::vector<int> out;
  for (int a = 0; a < c.k(); ++a)
    if (c.at(a - 1) < c.at(a)) out.push_back(a);
  return out;
}

CVector canonical_rotation(const CVector& c) {
  const std::vector<long long>& e = c.entries();
  const int k = c.k();
  std::vector<long long> best = e;
  std::vector<long long> candidate(e.size());
  for (int r = 1; r < k; ++r) {
    for (int a = 0; a < k; ++a)
      candidate[static_cast<std::size_t>(a)] =
          e[static_cast<std::size_t>(floor_mod(a + r, k))];
    if (candidate < best) best = candidate;
  }
  return CVector(std::move(best));
}

std::optional<BigInt> ChainCountCache::lookup(
    const std::vector<long long>& key) {
  std::lock_guard<std::mutex> lock(mutex_);
  const auto it = memo_.find(key);
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void ChainCountCache::store(const std::vector<long long>& key,
                            const BigInt& value) {
  std::lock_guard<std::mutex> lock(mutex_);
  memo_.emplace(key, value);
}

BigInt ChainCountCache::count(const CVector& c) {
  const std::vector<long long> root = canonical_rotation(c).entries();
  if (auto hit = lookup(root)) return *hit;

  // Post-order over the order ideal with an explicit stack: a key is resolved
  // once every downward cover is memoized, so the recursion depth never
  // touches the call stack.
  std::vector<std::vector<long long>> pending{root};
  while (!pending.empty()) {
    std::vector<long long> key = std::move(pending.back());
    pending.pop_back();
    if (lookup(key)) continue;
    const CVector v{std::vector<long long>(key)};
    BigInt total = v.is_zero() ? 1 : 0;
    bool ready = true;
    std::vector<std::vector<long long>> missing;
    for (int a : cover_moves(v)) {
      std::vector<long long> child =
          canonical_rotation(cvec_downward(v, a)).entries();
      if (auto hit = lookup(child)) {
        total += *hit;
      } else {
        ready = false;
        missing.push_back(std::move(child));
      }
    }
    if (ready) {
      store(key, total);
    } else {
      pending.push_back(std::move(key));
      for (auto& m : missing) pending.push_back(std::move(m));
    }
  }
  return *lookup(root);
}

BigInt count_maximal_chains(const CVector& c) {
  static ChainCountCache cache;
  return cache.count(c);
}

void for_each_maximal_chain(
    const CVector& c, const std::function<void(const MaximalChain&)>& visit,
    const BigInt& max_chains) {
  const BigInt total = count_maximal_chains(c);
  if (total > max_chains) {
    std::ostringstream msg;
    msg << "chain enumeration guard exceeded: " << total << " chains > "
        << max_chains;
    throw GuardExceeded(msg.str());
  }

  struct Frame {
    CVector v;
    int incoming;  // residue of the move that produced this frame
    std::vector<int> moves;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({c, -1, cover_moves(c), 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.v.is_zero()) {
      MaximalChain chain;
      chain.k = c.k();
      chain.residues.reserve(stack.size() - 1);
      for (std::size_t i = stack.size(); i-- > 1;)
        chain.residues.push_back(stack[i].incoming);
      visit(chain);
      stack.pop_back();
      continue;
    }
    if (f.next < f.moves.size()) {
      const int a = f.moves[f.next++];
      CVector child = cvec_downward(f.v, a);
      std::vector<int> moves = cover_moves(child);
      stack.push_back({std::move(child), a, std::move(moves), 0});
    } else {
      stack.pop_back();
    }
  }
}

std::vector<MaximalChain> enumerate_maximal_chains(const CVector& c,
                                                   const BigInt& max_chains) {
  std::vector<MaximalChain> out;
  for_each_maximal_chain(
      c, [&out](const MaximalChain& chain) { out.push_back(chain); },
      max_chains);
  return out;
}

HasseDiagram build_hasse(const CVector& root, long long max_nodes) {
  HasseDiagram h;
  h.k = root.k();
  std::map<std::vector<long long>, int> index;
  h.nodes.push_back(root);
  index.emplace(root.entries(), 0);
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    const CVector v = h.nodes[i];
    for (int a : cover_moves(v)) {
      CVector child = cvec_downward(v, a);
      auto [it, inserted] =
          index.try_emplace(child.entries(), static_cast<int>(h.nodes.size()));
      if (inserted) {
        if (static_cast<long long>(h.nodes.size()) >= max_nodes)
          throw GuardExceeded("order-ideal guard exceeded: more than " +
                              std::to_string(max_nodes) + " nodes");
        h.nodes.push_back(std::move(child));
      }
      h.edges.push_back({static_cast<int>(i), it->second, a});
    }
  }

  h.rank.reserve(h.nodes.size());
  for (const CVector& v : h.nodes) h.rank.push_back(v.sum());

  std::vector<std::vector<int>> children(h.nodes.size());
  for (const HasseDiagram::Edge& e : h.edges)
    children[static_cast<std::size_t>(e.from)].push_back(e.to);
  h.alpha.assign(h.nodes.size(), BigInt(0));
  for (std::size_t i = h.nodes.size(); i-- > 0;) {
    if (h.nodes[i].is_zero()) {
      h.alpha[i] = 1;
      continue;
    }
    for (int child : children[i])
      h.alpha[i] += h.alpha[static_cast<std::size_t>(child)];
  }
  return h;
}

std::string hasse_to_dot(const HasseDiagram& h) {
  std::ostringstream out;
  out << "digraph chains {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < h.nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << h.nodes[i].to_string() << "\\n"
        << h.alpha[i].str() << "\"];\n";
  for (const HasseDiagram::Edge& e : h.edges)
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.residue
        << "\"];\n";
  out << "}\n";
  return out.str();
}

nlohmann::json hasse_to_json(const HasseDiagram& h) {
  nlohmann::json doc;
  doc["k"] = h.k;
  doc["root"] = h.nodes.at(0).entries();
  doc["nodes"] = nlohmann::json::array();
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    doc["nodes"].push_back({{"cvec", h.nodes[i].entries()},
                            {"rank", h.rank[i]},
                            {"alpha", h.alpha[i].str()}});
  }
  doc["edges"] = nlohmann::json::array();
  for (const HasseDiagram::Edge& e : h.edges)
    doc["edges"].push_back(
        {{"from", e.from}, {"to", e.to}, {"residue", e.residue}});
  return doc;
}

// ---------------------------------------------------------------------------
// Closed forms.

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::domain_error(message);
}

// 2 when z is divisible by 3, otherwise -1.
long long beta_of(long long z) { return z % 3 == 0 ? 2 : -1; }

}  // namespace

BigInt alpha_one_column(int k, long long z) {
  require(k >= 2, "one-column family needs k >= 2");
  require(z >= 0, "one-column family needs z >= 0");
  return 1;
}

BigInt alpha_trigonal(const SplittingType& mu) {
  require(mu.k() == 3, "trigonal family needs k = 3");
  require(mu[0] < mu[1] && mu[1] < mu[2],
          "trigonal family needs strictly increasing entries");
  return binomial(mu[2] - mu[0] - 2, mu[1] - mu[0] - 1);
}

BigInt alpha_gonality_four(long long z) {
  require(z >= 1, "gonality-four family needs z >= 1");
  return power(2, z - 1);
}

BigInt alpha_gonality_five(long long z, bool offset) {
  require(z >= 1, "gonality-five family needs z >= 1");
  return offset ? fibonacci(2 * z - 1) : fibonacci(2 * z - 2);
}

BigInt alpha_gonality_six_jump2(long long z, int variant) {
  switch (variant) {
    case 0:
      require(z >= 1, "gonality-six family needs z >= 1");
      return (power(3, z - 1) + 1) / 2;
    case 1:
      require(z >= 2, "gonality-six split variant needs z >= 2");
      return (power(3, z - 1) - 1) / 2;
    case 2:
      require(z >= 1, "gonality-six family needs z >= 1");
      return power(3, z - 1);
    default:
      throw std::domain_error("gonality-six two-step variant must be 0..2");
  }
}

BigInt alpha_gonality_six_jump3(long long z, int variant) {
  const long long sign = z % 2 == 0 ? 1 : -1;
  switch (variant) {
    case 0:
      require(z >= 1, "gonality-six family needs z >= 1");
      return (power(2, 3 * z - 2) + sign * beta_of(z)) / 3;
    case 1:
      require(z >= 2, "gonality-six split variant needs z >= 2");
      return (power(2, 3 * z - 2) + sign * beta_of(z - 1)) / 3;
    case 2:
      require(z >= 1, "gonality-six family needs z >= 1");
      return (power(2, 3 * z - 2) + sign * beta_of(z + 1)) / 3;
    case 3:
      require(z >= 1, "gonality-six family needs z >= 1");
      return power(2, 3 * z - 2);
    default:
      throw std::domain_error("gonality-six three-step variant must be 0..3");
  }
}

BigInt alpha_one_row_one_column(int k, long long z1, long long z2,
                                long long i) {
  require(k >= 2, "insertion family needs k >= 2");
  require(z1 >= z2 && z2 >= 0, "insertion family needs z1 >= z2 >= 0");
  require(i >= 0 && i <= k - 2, "insertion family needs 0 <= i <= k-2");
  require(i == 0 || z2 >= 1, "insertion family needs z2 >= 1 when i > 0");
  const long long load = (k - 2) * (z1 + (k - 2) * z2);
  return binomial(load / (k - 1) - i, (k - 2) * z2 - i);
}

CVector one_row_one_column_vector(int k, long long z1, long long z2,
                                  long long i, long long j) {
  require(k >= 2, "insertion family needs k >= 2");
  require(z1 >= z2 && z2 >= 0, "insertion family needs z1 >= z2 >= 0");
  require(i >= 0 && i <= k - 2, "insertion family needs 0 <= i <= k-2");
  require(i == 0 || z2 >= 1, "insertion family needs z2 >= 1 when i > 0");
  require(j >= 0 && j <= k - 1, "insertion position must lie in 0..k-1");
  std::vector<long long> entries;
  entries.reserve(static_cast<std::size_t>(k));
  for (long long t = 0; t < k - 2 - i; ++t) entries.push_back(z2);
  for (long long t = 0; t < i; ++t) entries.push_back(z2 - 1);
  entries.push_back(0);
  entries.insert(entries.begin() + static_cast<std::ptrdiff_t>(j), z1);
  return CVector(std::move(entries));
}

bool one_row_one_column_applicable(int k, long long z1, long long z2,
                                   long long i, long long j) {
  require(k >= 2, "insertion family needs k >= 2");
  require(z1 >= z2 && z2 >= 0, "insertion family needs z1 >= z2 >= 0");
  require(i >= 0 && i <= k - 2, "insertion family needs 0 <= i <= k-2");
  require(i == 0 || z2 >= 1, "insertion family needs z2 >= 1 when i > 0");
  require(j >= 0 && j <= k - 1, "insertion position must lie in 0..k-1");
  if (k == 2) return true;
  // Walking one cover move down from an in-family vector decreases j by one
  // and either decreases z1 or increases i, starting from j = k-2 with
  // z1 = z2 (mod k-1).  Positions j = 0 and j = k-1 give rotations of each
  // other, so both inherit the j = k-1 condition.
  const long long m = k - 1;
  const bool congruent = (((z1 - z2 - i - j + (k - 2)) % m) + m) % m == 0;
  const bool position_ok = j == 0 || j == k - 1 || i + j <= k - 2;
  return congruent && position_ok;
}

BigInt alpha_catalan_type(int k) {
  require(k >= 3, "catalan family needs k >= 3");
  return catalan(k - 1) - 1;
}

BigInt alpha_rectangle(long long rows, long long cols) {
  return hook_length_count(rows, cols);
}

BigInt rank4_quadric_count(int k) {
  require(k >= 4, "rank-4 quadric count needs k >= 4");
  BigInt numerator = 1;
  BigInt denominator = 1;
  for (long long t = 0; t <= k - 4; ++t) {
    numerator *= binomial(k + 1 + t, k - 3 - t);
    denominator *= binomial(2 * t + 1, t);
  }
  return numerator / denominator;  // exact
}

}  // namespace staircase
