#include "staircase/tableau.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "staircase/errors.hpp"

namespace staircase {

namespace {

void require_modulus(int k) {
  if (k < 2) throw std::invalid_argument("modulus k must be at least 2");
}

std::vector<std::vector<int>> empty_fill(const Partition& shape) {
  std::vector<std::vector<int>> fill;
  fill.reserve(static_cast<std::size_t>(shape.num_rows()));
  for (long long y = 1; y <= shape.num_rows(); ++y)
    fill.emplace_back(static_cast<std::size_t>(shape.row(y)), 0);
  return fill;
}

}  // namespace

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> fill,
                 int alphabet)
    : shape_(std::move(shape)), fill_(std::move(fill)), alphabet_(alphabet) {
  if (alphabet_ < 0)
    throw std::invalid_argument("tableau alphabet bound must be nonnegative");
  if (static_cast<long long>(fill_.size()) != shape_.num_rows())
    throw std::invalid_argument("tableau fill has the wrong number of rows");
  for (long long y = 1; y <= shape_.num_rows(); ++y) {
    const auto& row = fill_[static_cast<std::size_t>(y - 1)];
    if (static_cast<long long>(row.size()) != shape_.row(y))
      throw std::invalid_argument("tableau fill row length mismatch");
    for (long long x = 1; x <= shape_.row(y); ++x) {
      const int s = row[static_cast<std::size_t>(x - 1)];
      if (s < 1 || s > alphabet_)
        throw std::invalid_argument("tableau symbol outside the alphabet");
      if (x > 1 && row[static_cast<std::size_t>(x - 2)] >= s)
        throw std::invalid_argument("tableau rows must strictly increase");
      if (y > 1 && at(x, y - 1) >= s)
        throw std::invalid_argument("tableau columns must strictly increase");
    }
  }
}

int Tableau::at(long long x, long long y) const {
  if (!shape_.contains(x, y))
    throw std::out_of_range("tableau coordinate outside the shape");
  return fill_[static_cast<std::size_t>(y - 1)][static_cast<std::size_t>(x - 1)];
}

std::vector<int> Tableau::symbols() const {
  std::set<int> seen;
  for (const auto& row : fill_) seen.insert(row.begin(), row.end());
  return std::vector<int>(seen.begin(), seen.end());
}

bool Tableau::has_symbol(int s) const {
  for (const auto& row : fill_)
    if (std::find(row.begin(), row.end(), s) != row.end()) return true;
  return false;
}

std::vector<BoxCoord> Tableau::boxes_of(int s) const {
  std::vector<BoxCoord> out;
  for (long long y = 1; y <= shape_.num_rows(); ++y)
    for (long long x = 1; x <= shape_.row(y); ++x)
      if (at(x, y) == s) out.push_back({x, y});
  return out;
}

Tableau transpose(const Tableau& t) {
  const Partition shape = transpose(t.shape());
  auto fill = empty_fill(shape);
  for (long long y = 1; y <= t.shape().num_rows(); ++y)
    for (long long x = 1; x <= t.shape().row(y); ++x)
      fill[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y - 1)] =
          t.at(x, y);
  return Tableau(shape, std::move(fill), t.alphabet());
}

bool is_uniform(const Tableau& t, int k) {
  require_modulus(k);
  std::vector<int> cls(static_cast<std::size_t>(t.alphabet()) + 1, -1);
  for (long long y = 1; y <= t.shape().num_rows(); ++y) {
    for (long long x = 1; x <= t.shape().row(y); ++x) {
      const int s = t.at(x, y);
      const int c = floor_mod(y - x, k);
      if (cls[static_cast<std::size_t>(s)] < 0) {
        cls[static_cast<std::size_t>(s)] = c;
      } else if (cls[static_cast<std::size_t>(s)] != c) {
        return false;
      }
    }
  }
  return true;
}

void for_each_uniform(const Partition& shape, int k, int alphabet,
                      const std::function<void(const Tableau&)>& visit,
                      long long max_boxes) {
  require_modulus(k);
  if (alphabet < 0)
    throw std::invalid_argument("tableau alphabet bound must be nonnegative");
  if (shape.box_count() > max_boxes)
    throw GuardExceeded("uniform-tableau enumeration guard exceeded: " +
                        std::to_string(shape.box_count()) + " boxes > " +
                        std::to_string(max_boxes));

  std::vector<BoxCoord> boxes;
  for (long long y = 1; y <= shape.num_rows(); ++y)
    for (long long x = 1; x <= shape.row(y); ++x) boxes.push_back({x, y});

  auto fill = empty_fill(shape);
  // class_of[s] is the diagonal class of symbol s plus one; zero marks unused.
  std::vector<int> class_of(static_cast<std::size_t>(alphabet) + 1, 0);
  std::vector<int> uses(static_cast<std::size_t>(alphabet) + 1, 0);

  auto cell = [&fill](const BoxCoord& b) -> int& {
    return fill[static_cast<std::size_t>(b.y - 1)][static_cast<std::size_t>(b.x - 1)];
  };

  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == boxes.size()) {
      visit(Tableau(shape, fill, alphabet));
      return;
    }
    const BoxCoord b = boxes[i];
    int lo = 1;
    if (b.x > 1)
      lo = std::max(lo, fill[static_cast<std::size_t>(b.y - 1)]
                            [static_cast<std::size_t>(b.x - 2)] + 1);
    if (b.y > 1 && shape.row(b.y - 1) >= b.x)
      lo = std::max(lo, fill[static_cast<std::size_t>(b.y - 2)]
                            [static_cast<std::size_t>(b.x - 1)] + 1);
    const int c = diagonal_class(b, k);
    for (int s = lo; s <= alphabet; ++s) {
      auto& known = class_of[static_cast<std::size_t>(s)];
      if (known != 0 && known != c + 1) continue;
      const int saved = known;
      known = c + 1;
      ++uses[static_cast<std::size_t>(s)];
      cell(b) = s;
      place(i + 1);
      --uses[static_cast<std::size_t>(s)];
      if (uses[static_cast<std::size_t>(s)] == 0) known = saved;
    }
  };
  place(0);
}

std::vector<Tableau> enumerate_uniform(const Partition& shape, int k,
                                       int alphabet, long long max_boxes) {
  std::vector<Tableau> out;
  for_each_uniform(shape, k, alphabet,
                   [&out](const Tableau& t) { out.push_back(t); }, max_boxes);
  return out;
}

std::vector<Partition> chain_partitions(const MaximalChain& chain) {
  require_modulus(chain.k);
  std::vector<Partition> out;
  out.emplace_back();
  for (int a : chain.residues) {
    Partition next = upward_displacement(out.back(), chain.k, a);
    if (next.box_count() == out.back().box_count())
      throw std::invalid_argument("chain step adds no box");
    out.push_back(std::move(next));
  }
  return out;
}

Tableau phi(const std::vector<int>& symbols, const MaximalChain& chain,
            int alphabet) {
  if (symbols.size() != chain.residues.size())
    throw std::invalid_argument("symbol count must equal chain length");
  for (std::size_t j = 0; j < symbols.size(); ++j) {
    if (symbols[j] < 1 || symbols[j] > alphabet)
      throw std::invalid_argument("chain symbol outside the alphabet");
    if (j > 0 && symbols[j - 1] >= symbols[j])
      throw std::invalid_argument("chain symbols must strictly increase");
  }
  const std::vector<Partition> steps = chain_partitions(chain);
  const Partition& shape = steps.back();
  auto fill = empty_fill(shape);
  for (std::size_t j = 1; j < steps.size(); ++j) {
    for (long long y = 1; y <= steps[j].num_rows(); ++y) {
      for (long long x = steps[j - 1].row(y) + 1; x <= steps[j].row(y); ++x)
        fill[static_cast<std::size_t>(y - 1)][static_cast<std::size_t>(x - 1)] =
            symbols[j - 1];
    }
  }
  return Tableau(shape, std::move(fill), alphabet);
}

Tableau saturate(const Tableau& t, int k) {
  require_modulus(k);
  if (!is_core(t.shape(), k))
    throw std::domain_error("saturate requires a k-core shape");
  if (!is_uniform(t, k))
    throw std::invalid_argument("saturate requires a k-uniform tableau");

  auto result = empty_fill(t.shape());
  Partition current = t.shape();
  while (!current.empty()) {
    // The largest symbol inside the current shape sits at a row end, and all
    // of its boxes share one diagonal class.
    int h = 0;
    int cls = 0;
    for (long long y = 1; y <= current.num_rows(); ++y) {
      const int s = t.at(current.row(y), y);
      if (s > h) {
        h = s;
        cls = floor_mod(y - current.row(y), k);
      }
    }
    // Stamp the symbol onto every inside corner of that class, then strip
    // the class.
    for (const BoxCoord& b : corners(current).inside) {
      if (diagonal_class(b, k) == cls)
        result[static_cast<std::size_t>(b.y - 1)]
              [static_cast<std::size_t>(b.x - 1)] = h;
    }
    current = downward_displacement(current, k, cls);
  }
  return Tableau(t.shape(), std::move(result), t.alphabet());
}

bool is_saturated(const Tableau& t, int k) {
  require_modulus(k);
  if (!is_core(t.shape(), k))
    throw std::domain_error("saturation is defined on k-core shapes");
  if (!is_uniform(t, k))
    throw std::invalid_argument("saturation is defined for k-uniform tableaux");
  const std::vector<int> syms = t.symbols();
  if (static_cast<long long>(syms.size()) != rho(t.shape(), k)) return false;
  // Each level set must again be a k-core; the top one is the shape itself.
  for (std::size_t j = 0; j + 1 < syms.size(); ++j) {
    std::vector<long long> rows;
    for (long long y = 1; y <= t.shape().num_rows(); ++y) {
      long long len = 0;
      while (len < t.shape().row(y) && t.at(len + 1, y) <= syms[j]) ++len;
      if (len == 0) break;  // later rows are shorter still
      rows.push_back(len);
    }
    if (!is_core(Partition(std::move(rows)), k)) return false;
  }
  return true;
}

Tableau swap_in(const Tableau& t, int incoming, int outgoing,
                const std::vector<BoxCoord>& boxes) {
  if (incoming < 1 || incoming > t.alphabet())
    throw std::invalid_argument("incoming symbol outside the alphabet");
  if (t.has_symbol(incoming))
    throw std::invalid_argument("incoming symbol already present");
  if (!t.has_symbol(outgoing))
    throw std::invalid_argument("outgoing symbol not present");
  for (int s : t.symbols()) {
    if ((incoming < s && s < outgoing) || (outgoing < s && s < incoming))
      throw std::invalid_argument(
          "outgoing symbol must be the nearest present symbol");
  }
  if (boxes.empty())
    throw std::invalid_argument("swap needs at least one box");
  const std::vector<BoxCoord> occupied = t.boxes_of(outgoing);
  auto fill = t.fill();
  for (const BoxCoord& b : boxes) {
    if (std::find(occupied.begin(), occupied.end(), b) == occupied.end())
      throw std::invalid_argument("swap boxes must hold the outgoing symbol");
    fill[static_cast<std::size_t>(b.y - 1)][static_cast<std::size_t>(b.x - 1)] =
        incoming;
  }
  return Tableau(t.shape(), std::move(fill), t.alphabet());
}

Tableau cycle_out(const Tableau& t, int symbol) {
  if (!t.has_symbol(symbol))
    throw std::invalid_argument("cycled symbol not present");
  int below = 0, above = 0;
  for (int s = symbol - 1; s >= 1; --s)
    if (!t.has_symbol(s)) {
      below = s;
      break;
    }
  for (int s = symbol + 1; s <= t.alphabet(); ++s)
    if (!t.has_symbol(s)) {
      above = s;
      break;
    }
  if (below == 0 && above == 0)
    throw std::domain_error("no absent symbol to cycle toward");
  const bool downward =
      above == 0 || (below != 0 && symbol - below <= above - symbol);
  auto fill = t.fill();
  for (auto& row : fill) {
    for (int& s : row) {
      if (downward && below < s && s <= symbol) --s;
      if (!downward && symbol <= s && s < above) ++s;
    }
  }
  return Tableau(t.shape(), std::move(fill), t.alphabet());
}

BigInt hook_length_count(long long rows, long long cols) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("rectangle sides must be nonnegative");
  BigInt numerator = factorial(rows * cols);
  BigInt denominator = 1;
  for (long long j = 0; j < cols; ++j) {
    numerator *= factorial(j);
    denominator *= factorial(rows + j);
  }
  return numerator / denominator;  // exact
}

Tableau parse_tableau(const std::string& text, int alphabet) {
  std::vector<std::vector<int>> fill;
  std::istringstream in(text);
  std::string line;
  int largest = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<int> row;
    int value = 0;
    while (fields >> value) {
      row.push_back(value);
      largest = std::max(largest, value);
    }
    if (!fields.eof())
      throw std::invalid_argument("invalid tableau entry in line: '" + line + "'");
    if (!row.empty()) fill.push_back(std::move(row));
  }
  std::vector<long long> rows;
  rows.reserve(fill.size());
  for (const auto& row : fill) rows.push_back(static_cast<long long>(row.size()));
  return Tableau(Partition(std::move(rows)), std::move(fill),
                 alphabet == 0 ? largest : alphabet);
}

std::string to_text(const Tableau& t) {
  std::ostringstream out;
  for (const auto& row : t.fill()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ' ';
      out << row[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace staircase
