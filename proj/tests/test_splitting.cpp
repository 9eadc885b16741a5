#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "staircase/partition.hpp"
#include "staircase/splitting.hpp"

using namespace staircase;
using namespace staircase_test;

namespace {

Partition shape_of(const SplittingType& mu) { return staircase::staircase(mu); }

SplittingType twisted(const SplittingType& mu, long long t) {
  std::vector<long long> entries = mu.entries();
  for (auto& e : entries) e += t;
  return SplittingType{entries};
}

// Containment of Ferrers diagrams, row by row.
bool shape_subset(const Partition& inner, const Partition& outer) {
  for (long long y = 1; y <= inner.num_rows(); ++y)
    if (inner.row(y) > outer.row(y)) return false;
  return true;
}

}  // namespace

TEST_CASE("splitting type construction sorts and validates") {
  const SplittingType mu{{1, -3, -1}};
  CHECK(mu.entries() == std::vector<long long>{-3, -1, 1});
  CHECK(mu.k() == 3);
  CHECK(mu[0] == -3);
  CHECK(mu[2] == 1);
  CHECK(mu.sum() == -3);
  CHECK(mu.to_string() == "(-3,-1,1)");
  CHECK_THROWS_AS(SplittingType(std::vector<long long>{5}), std::invalid_argument);
  CHECK_THROWS_AS(SplittingType(std::vector<long long>{}), std::invalid_argument);
}

TEST_CASE("parsing comma-separated splitting types") {
  CHECK(parse_splitting_type("-3,-1,1") == SplittingType{{-3, -1, 1}});
  CHECK(parse_splitting_type("0,0") == SplittingType{{0, 0}});
  CHECK(parse_splitting_type("1,-3,-1") == SplittingType{{-3, -1, 1}});
  CHECK_THROWS_AS(parse_splitting_type("1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_splitting_type(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_splitting_type("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_splitting_type("1,,2"), std::invalid_argument);
}

TEST_CASE("twist section counts") {
  const SplittingType mu{{-3, -1, 1}};
  CHECK(h_invariants(mu, -1).x == 1);
  CHECK(h_invariants(mu, -1).y == 4);
  CHECK(h_invariants(mu, 0).x == 2);
  CHECK(h_invariants(mu, 0).y == 2);
  CHECK(h_invariants(mu, 1).x == 4);
  CHECK(h_invariants(mu, 1).y == 1);
  CHECK(h_invariants(SplittingType{{0, 0, 0}}, -1).x == 0);
  CHECK(h_invariants(SplittingType{{0, 0, 0}}, -1).y == 0);
  // x - y telescopes to the plain sum of the shifted entries.
  for (const auto& s : splitting_grid(3, -3, 1))
    for (long long m = -5; m <= 5; ++m) {
      const HInvariants h = h_invariants(s, m);
      CHECK(h.x >= 0);
      CHECK(h.y >= 0);
      CHECK(h.x - h.y == s.sum() + 3 * (m + 1));
    }
}

TEST_CASE("magnitude and degree") {
  CHECK(magnitude(SplittingType{{-3, -1, 1}}) == 5);
  CHECK(magnitude(SplittingType{{0, 0, 0, 0}}) == 0);
  CHECK(magnitude(SplittingType{{-3, -3, -2, -1, 0, 0}}) == 12);
  CHECK(degree(SplittingType{{-3, -1, 1}}, 5) == 4);
  CHECK(degree(SplittingType{{0, 0}}, 0) == 1);
  CHECK(degree(SplittingType{{-2, -2}}, 3) == 0);
  CHECK_THROWS_AS(degree(SplittingType{{0, 0}}, -1), std::invalid_argument);
}

TEST_CASE("staircase shapes") {
  CHECK(shape_of(SplittingType{{-3, -1, 1}}) == Partition{{4, 2, 1, 1}});
  CHECK(shape_of(SplittingType{{0, 0, 0}}) == Partition{});
  CHECK(shape_of(SplittingType{{-2, 0}}) == Partition{{1}});
  CHECK(shape_of(SplittingType{{-3, -3, -2, -1, 0, 0}}).box_count() > 0);
}

TEST_CASE("rank jumps across the contributing window") {
  const auto jumps = rank_jumps(SplittingType{{-3, -1, 1}});
  REQUIRE(jumps.size() == 5);
  const std::vector<long long> ms{-2, -1, 0, 1, 2};
  const std::vector<long long> alphas{0, 1, 1, 2, 2};
  const std::vector<bool> stricts{false, false, true, true, false};
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    CHECK(jumps[i].m == ms[i]);
    CHECK(jumps[i].alpha == alphas[i]);
    CHECK(jumps[i].strict == stricts[i]);
  }

  const auto zero = rank_jumps(SplittingType{{0, 0}});
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].alpha == 0);
  CHECK_FALSE(zero[0].strict);

  // Jumps are weakly increasing in m.
  for (const auto& s : splitting_grid(3, -4, 0)) {
    const auto js = rank_jumps(s);
    for (std::size_t i = 1; i < js.size(); ++i)
      CHECK(js[i - 1].alpha <= js[i].alpha);
  }
}

TEST_CASE("first row and first column deletion") {
  const SplittingType mu{{-3, -1, 1}};
  const auto plus = first_row_deleted(mu);
  REQUIRE(plus.has_value());
  CHECK(*plus == SplittingType{{-2, -1, 1}});
  CHECK(shape_of(*plus) == Partition{{2, 1, 1}});

  const auto minus = first_column_deleted(mu);
  REQUIRE(minus.has_value());
  CHECK(*minus == SplittingType{{-3, -1, 0}});
  CHECK(shape_of(*minus) == Partition{{3, 1}});

  CHECK_FALSE(first_row_deleted(SplittingType{{0, 0, 0}}).has_value());
  CHECK_FALSE(first_column_deleted(SplittingType{{0, 0}}).has_value());
}

TEST_CASE("deletion really removes a row or column of the staircase") {
  for (const auto& s : splitting_grid(3, -3, 0)) {
    const Partition shape = shape_of(s);
    const auto plus = first_row_deleted(s);
    const auto minus = first_column_deleted(s);
    CHECK(plus.has_value() == !shape.empty());
    CHECK(minus.has_value() == !shape.empty());
    if (shape.empty()) continue;

    std::vector<long long> rows(shape.rows().begin() + 1, shape.rows().end());
    CHECK(shape_of(*plus) == Partition{rows});
    const Partition flipped = transpose(shape);
    std::vector<long long> cols(flipped.rows().begin() + 1,
                                flipped.rows().end());
    CHECK(shape_of(*minus) == transpose(Partition{cols}));

    // Magnitude drop: the largest strict jump for the row deletion, the
    // modulus minus the smallest strict jump for the column deletion.
    std::vector<long long> strict;
    for (const auto& j : rank_jumps(s))
      if (j.strict) strict.push_back(j.alpha);
    if (!strict.empty()) {
      CHECK(magnitude(s) - magnitude(*plus) ==
            *std::max_element(strict.begin(), strict.end()));
      CHECK(magnitude(s) - magnitude(*minus) ==
            s.k() - *std::min_element(strict.begin(), strict.end()));
    }
  }
}

TEST_CASE("dual splitting type transposes the staircase") {
  CHECK(serre_dual(SplittingType{{-3, -1, 1}}) == SplittingType{{-1, 1, 3}});
  CHECK(serre_dual(SplittingType{{0, 0}}) == SplittingType{{0, 0}});
  CHECK(serre_dual(SplittingType{{-2, -2, 0, 0}}) == SplittingType{{0, 0, 2, 2}});
  for (const auto& s : splitting_grid(3, -3, 1)) {
    CHECK(shape_of(serre_dual(s)) == transpose(shape_of(s)));
    CHECK(serre_dual(serre_dual(s)) == s);
    CHECK(magnitude(serre_dual(s)) == magnitude(s));
  }
}

TEST_CASE("dominance order") {
  const SplittingType a{{-3, -1, 1}};
  const SplittingType b{{-3, 0, 0}};
  CHECK(dominance_leq(a, b));
  CHECK_FALSE(dominance_leq(b, a));
  CHECK(dominance_leq(a, a));
  CHECK_THROWS_AS(dominance_leq(a, SplittingType{{-3, -1}}), std::domain_error);
  CHECK_THROWS_AS(dominance_leq(a, SplittingType{{0, 0, 0}}), std::domain_error);
}

TEST_CASE("dominance implies staircase containment") {
  const auto grid = splitting_grid(3, -3, 1);
  for (const auto& a : grid)
    for (const auto& b : grid) {
      if (a.sum() != b.sum()) continue;
      if (!dominance_leq(a, b)) continue;
      CHECK(shape_subset(shape_of(b), shape_of(a)));
      for (long long m = -5; m <= 5; ++m)
        CHECK(h_invariants(a, m).x >= h_invariants(b, m).x);
    }
}

TEST_CASE("every inside corner lies on the corner diagonal") {
  CHECK(corner_diagonal(SplittingType{{-3, -1, 1}}) == 0);
  CHECK(corner_diagonal(SplittingType{{-3, -3, -2, -1, 0, 0}}) == 3);
  CHECK(corner_diagonal(SplittingType{{0, 0, 0}}) == 0);
  for (const auto& s : splitting_grid(4, -3, 0)) {
    const int c = corner_diagonal(s);
    for (const auto& box : corners(shape_of(s)).inside)
      CHECK(diagonal_class(box, s.k()) == c);
  }
}

TEST_CASE("closed-form column-height vector") {
  CHECK(c_vector(SplittingType{{-3, -1, 1}}).entries() ==
        std::vector<long long>{4, 1, 0});
  CHECK(c_vector(SplittingType{{0, 0, 0, 0}}).is_zero());
  CHECK(c_vector(SplittingType{{-3, -3, -2, -1, 0, 0}}).entries() ==
        std::vector<long long>{0, 0, 0, 5, 5, 2});
}

TEST_CASE("staircase structure across a grid of splitting types") {
  auto run = [](int k, long long lo, long long hi) {
    for (const auto& s : splitting_grid(k, lo, hi)) {
      const Partition shape = shape_of(s);
      CHECK(is_core(shape, k));
      CHECK(rho(shape, k) == magnitude(s));
      CHECK(c_vector(s) == c_vector(shape, k));
      for (long long t : {-2LL, 1LL, 3LL}) {
        CHECK(shape_of(twisted(s, t)) == shape);
        CHECK(magnitude(twisted(s, t)) == magnitude(s));
        CHECK(c_vector(twisted(s, t)) == c_vector(s));
      }
    }
  };
  run(2, -4, 1);
  run(3, -4, 1);
  run(4, -3, 0);
  run(5, -3, 0);
  run(6, -2, 0);
}
