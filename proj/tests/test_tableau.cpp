#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "staircase/errors.hpp"
#include "staircase/tableau.hpp"

using namespace staircase;
using namespace staircase_test;

namespace {

const Partition kStair{{4, 2, 1, 1}};

// The two saturated fillings of the trigonal staircase on five symbols.
Tableau divisor_tableau() {
  return Tableau{kStair, {{1, 3, 4, 5}, {2, 5}, {3}, {5}}, 5};
}
Tableau other_tableau() {
  return Tableau{kStair, {{1, 2, 3, 5}, {3, 5}, {4}, {5}}, 5};
}

}  // namespace

TEST_CASE("tableau construction and accessors") {
  const Tableau t = divisor_tableau();
  CHECK(t.shape() == kStair);
  CHECK(t.alphabet() == 5);
  CHECK(t.at(1, 1) == 1);
  CHECK(t.at(4, 1) == 5);
  CHECK(t.at(2, 2) == 5);
  CHECK(t.at(1, 4) == 5);
  CHECK(t.symbols() == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(t.has_symbol(4));
  CHECK_FALSE(t.has_symbol(6));
  CHECK(t.boxes_of(5) == std::vector<BoxCoord>{{4, 1}, {2, 2}, {1, 4}});
  CHECK(t.boxes_of(6).empty());
  CHECK_THROWS_AS(t.at(5, 1), std::out_of_range);
  CHECK_THROWS_AS(t.at(2, 3), std::out_of_range);

  CHECK_THROWS_AS((Tableau{kStair, {{1, 2, 3}}, 5}), std::invalid_argument);
  CHECK_THROWS_AS((Tableau{Partition{{2}}, {{2, 2}}, 5}), std::invalid_argument);
  CHECK_THROWS_AS((Tableau{Partition{{1, 1}}, {{2}, {1}}, 5}),
                  std::invalid_argument);
  CHECK_THROWS_AS((Tableau{Partition{{1}}, {{7}}, 5}), std::invalid_argument);
  CHECK_THROWS_AS((Tableau{Partition{{1}}, {{0}}, 5}), std::invalid_argument);
}

TEST_CASE("transpose exchanges the two saturated fillings") {
  CHECK(transpose(divisor_tableau()) == other_tableau());
  CHECK(transpose(transpose(divisor_tableau())) == divisor_tableau());
}

TEST_CASE("uniformity checks diagonals of equal symbols") {
  CHECK(is_uniform(divisor_tableau(), 3));
  // Symbol 3 sits on diagonals -1 and 2, congruent mod 3 but not mod 2.
  CHECK_FALSE(is_uniform(divisor_tableau(), 2));
  // Fillings with all-distinct symbols are uniform for every modulus.
  const Tableau std22{Partition{{2, 2}}, {{1, 3}, {2, 4}}, 4};
  for (int k = 2; k <= 5; ++k) CHECK(is_uniform(std22, k));
}

TEST_CASE("uniform enumeration on the trigonal staircase") {
  const auto all = enumerate_uniform(kStair, 3, 5);
  REQUIRE(all.size() == 2);
  CHECK(all[0] == other_tableau());
  CHECK(all[1] == divisor_tableau());
  for (const auto& t : all) {
    CHECK(is_uniform(t, 3));
    CHECK(t.symbols().size() == 5);
  }
}

TEST_CASE("uniform enumeration on a square") {
  const auto all = enumerate_uniform(Partition{{2, 2}}, 2, 4);
  CHECK(all.size() == 6);
  // Row-major lexicographic production order, no duplicates.
  for (std::size_t i = 1; i < all.size(); ++i)
    CHECK(all[i - 1].fill() < all[i].fill());
  // Exactly the standard fillings use all four symbols.
  int standard = 0;
  for (const auto& t : all)
    if (t.symbols().size() == 4) ++standard;
  CHECK(standard == 2);
  CHECK(BigInt(standard) == hook_length_count(2, 2));
}

TEST_CASE("uniform enumeration guard") {
  CHECK_THROWS_AS(enumerate_uniform(Partition{{17}}, 3, 2), GuardExceeded);
  CHECK_NOTHROW(enumerate_uniform(Partition{{17}}, 3, 2, 17));
}

TEST_CASE("maximal chains produce nested partitions") {
  const MaximalChain chain{3, {0, 1, 2, 1, 0}};
  const auto steps = chain_partitions(chain);
  REQUIRE(steps.size() == 6);
  CHECK(steps.front() == Partition{});
  CHECK(steps[1] == Partition{{1}});
  CHECK(steps[2] == Partition{{1, 1}});
  CHECK(steps[3] == Partition{{2, 1, 1}});
  CHECK(steps[4] == Partition{{3, 1, 1}});
  CHECK(steps.back() == kStair);
  // A step that adds no box is rejected.
  CHECK_THROWS_AS(chain_partitions(MaximalChain{3, {1}}), std::invalid_argument);
}

TEST_CASE("chain labeling produces saturated tableaux") {
  const MaximalChain left{3, {0, 1, 2, 1, 0}};
  const MaximalChain right{3, {0, 2, 1, 2, 0}};
  CHECK(phi({1, 2, 3, 4, 5}, left, 5) == divisor_tableau());
  CHECK(phi({1, 2, 3, 4, 5}, right, 5) == other_tableau());

  // Relabeling the steps keeps the box layout.
  const Tableau sparse = phi({2, 4, 6, 8, 10}, left, 10);
  CHECK(sparse.alphabet() == 10);
  CHECK(sparse.at(1, 1) == 2);
  CHECK(sparse.at(2, 2) == 10);
  CHECK(sparse.boxes_of(10) == divisor_tableau().boxes_of(5));
  CHECK(is_saturated(sparse, 3));

  CHECK_THROWS_AS(phi({1, 2, 3}, left, 5), std::invalid_argument);
  CHECK_THROWS_AS(phi({1, 2, 3, 4, 9}, left, 5), std::invalid_argument);
  CHECK_THROWS_AS(phi({1, 2, 2, 3, 4}, left, 5), std::invalid_argument);
}

TEST_CASE("saturation rebuilds corner classes") {
  // An eight-symbol uniform filling collapses onto five corner classes.
  const Tableau loose{kStair, {{1, 2, 4, 5}, {3, 7}, {6}, {8}}, 8};
  CHECK(is_uniform(loose, 3));
  CHECK_FALSE(is_saturated(loose, 3));
  const Tableau packed = saturate(loose, 3);
  CHECK(packed == Tableau{kStair, {{1, 2, 4, 8}, {4, 8}, {6}, {8}}, 8});
  CHECK(is_saturated(packed, 3));
  CHECK(packed.symbols().size() == 5);

  // Saturated inputs are fixed points.
  CHECK(saturate(divisor_tableau(), 3) == divisor_tableau());
  CHECK(saturate(other_tableau(), 3) == other_tableau());

  // Non-core shapes and non-uniform fillings are rejected.
  CHECK_THROWS_AS(saturate(Tableau{Partition{{2, 2}}, {{1, 2}, {2, 3}}, 3}, 3),
                  std::domain_error);
  CHECK_THROWS_AS(saturate(Tableau{Partition{{3, 1}}, {{1, 2, 3}, {2}}, 3}, 3),
                  std::invalid_argument);
}

TEST_CASE("saturation keeps surviving symbols on their diagonal classes") {
  const Tableau loose{kStair, {{1, 2, 4, 5}, {3, 7}, {6}, {8}}, 8};
  const Tableau packed = saturate(loose, 3);
  for (int s : packed.symbols()) {
    const auto before = loose.boxes_of(s);
    const auto after = packed.boxes_of(s);
    REQUIRE(!before.empty());
    for (const auto& box : after)
      CHECK(diagonal_class(box, 3) == diagonal_class(before.front(), 3));
  }
}

TEST_CASE("saturation recognizer frozen cases") {
  CHECK(is_saturated(divisor_tableau(), 3));
  CHECK(is_saturated(other_tableau(), 3));
  CHECK(is_saturated(Tableau{Partition{}, {}, 3}, 3));
  // Too many distinct symbols for the rank.
  CHECK_FALSE(is_saturated(Tableau{kStair, {{1, 2, 4, 5}, {3, 7}, {6}, {8}}, 8},
                           3));
  // Only defined on core shapes with uniform fillings.
  CHECK_THROWS_AS(is_saturated(Tableau{Partition{{1, 1}}, {{1}, {2}}, 2}, 2),
                  std::domain_error);
  CHECK_THROWS_AS(
      is_saturated(Tableau{Partition{{3, 1}}, {{1, 2, 3}, {2}}, 3}, 3),
      std::invalid_argument);
}

TEST_CASE("swapping an absent symbol onto adjacent boxes") {
  // Replacing every box keeps the symbol count.
  const Tableau cell{Partition{{1}}, {{3}}, 5};
  const Tableau swapped = swap_in(cell, 5, 3, {{1, 1}});
  CHECK(swapped == Tableau{Partition{{1}}, {{5}}, 5});
  // Swapping back is the inverse.
  CHECK(swap_in(swapped, 3, 5, {{1, 1}}) == cell);

  // Replacing a proper subset adds one symbol.
  const Tableau t = other_tableau();
  const Tableau wider{t.shape(), t.fill(), 6};
  const Tableau split = swap_in(wider, 6, 5, {{4, 1}});
  CHECK(split.symbols() == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(split.at(4, 1) == 6);
  CHECK(split.at(2, 2) == 5);

  SUBCASE("preconditions") {
    // Incoming must be absent, outgoing present on the named boxes.
    CHECK_THROWS_AS(swap_in(wider, 5, 4, {{3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(swap_in(wider, 6, 7, {{4, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(swap_in(wider, 6, 5, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(swap_in(wider, 6, 5, {}), std::invalid_argument);
    // The outgoing symbol must be the nearest present one: here 4 and 5 sit
    // between the incoming 6 and the outgoing 3.
    CHECK_THROWS_AS(swap_in(wider, 6, 3, {{3, 1}}), std::invalid_argument);
  }
}

TEST_CASE("cycling a symbol toward the nearest absent one") {
  // One present symbol between bound and target shifts over.
  const Tableau t1{kStair, {{1, 2, 3, 5}, {3, 5}, {4}, {5}}, 6};
  const Tableau t2 = cycle_out(t1, 5);
  CHECK(t2 == Tableau{kStair, {{1, 2, 3, 6}, {3, 6}, {4}, {6}}, 6});

  // Cycling through a crowd moves every symbol in between one step.
  const Tableau t4{kStair, {{1, 4, 5, 6}, {3, 6}, {4}, {6}}, 6};
  CHECK(cycle_out(t4, 6) == Tableau{kStair, {{1, 3, 4, 5}, {2, 5}, {3}, {5}}, 6});

  // Distance ties resolve toward the smaller absent symbol.
  CHECK(cycle_out(Tableau{Partition{{2}}, {{1, 3}}, 4}, 3) ==
        Tableau{Partition{{2}}, {{1, 2}}, 4});
  CHECK(cycle_out(Tableau{Partition{{1}}, {{2}}, 3}, 2) ==
        Tableau{Partition{{1}}, {{1}}, 3});
  CHECK(cycle_out(Tableau{Partition{{1}}, {{2}}, 2}, 2) ==
        Tableau{Partition{{1}}, {{1}}, 2});

  CHECK_THROWS_AS(cycle_out(divisor_tableau(), 5), std::domain_error);
  CHECK_THROWS_AS(cycle_out(t1, 6), std::invalid_argument);
}

TEST_CASE("rectangle standard filling counts") {
  CHECK(hook_length_count(1, 1) == 1);
  CHECK(hook_length_count(0, 3) == 1);
  CHECK(hook_length_count(1, 7) == 1);
  CHECK(hook_length_count(2, 2) == 2);
  CHECK(hook_length_count(3, 4) == 462);
  CHECK(hook_length_count(4, 4) == 24024);
  CHECK_THROWS_AS(hook_length_count(-1, 2), std::invalid_argument);
  // Two-row rectangles count ballot sequences.
  for (long long c = 1; c <= 6; ++c)
    CHECK(hook_length_count(2, c) == catalan(c));
  // Against the backtracking oracle.
  for (long long r = 1; r <= 3; ++r)
    for (long long c = r; c <= 4; ++c) {
      std::vector<long long> rows(static_cast<std::size_t>(r), c);
      CHECK(hook_length_count(r, c) == syt_count_brute(Partition{rows}));
    }
}

TEST_CASE("tableau text round-trip") {
  const std::string text = "1 3 4 5\n2 5\n3\n5\n";
  const Tableau parsed = parse_tableau(text);
  CHECK(parsed == divisor_tableau());
  CHECK(parsed.alphabet() == 5);
  CHECK(to_text(parsed) == text);
  CHECK(parse_tableau("1 3 4 5\n2 5\n3\n5", 9).alphabet() == 9);
  CHECK_THROWS_AS(parse_tableau("1 x\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tableau("1\n1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tableau("2 1\n"), std::invalid_argument);
}
