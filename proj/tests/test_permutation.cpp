#include "omega/permutation.hpp"

#include <stdexcept>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace omega;
using omega::testing::symmetric_group;

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation({}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({2, 3}), std::invalid_argument);
  CHECK(Permutation::identity(3).word() == std::vector<int>{1, 2, 3});
}

TEST_CASE("inversions") {
  CHECK(inversions(Permutation({1, 2, 3, 4, 5})) == 0);
  CHECK(inversions(Permutation({1, 6, 5, 2, 3, 4})) == 7);
  CHECK(inversions(Permutation({1, 6, 5, 4, 2, 3})) == 9);
}

TEST_CASE("standard cyclic form") {
  CHECK(to_string(standard_cyclic_form(Permutation({2, 1, 3, 5, 4}))) == "(1,2)(3)(4,5)");
  CHECK(to_string(standard_cyclic_form(Permutation::identity(5))) == "(1)(2)(3)(4)(5)");
  CHECK(to_string(standard_cyclic_form(Permutation({3, 1, 2, 5, 4}))) == "(1,3,2)(4,5)");
}

TEST_CASE("omit_parentheses") {
  const CyclicForm x{{{1, 2}, {3}, {4, 5}}};
  CHECK(omit_parentheses(x) == Permutation::identity(5));

  const CyclicForm ident{{{1}, {2}, {3}, {4}}};
  CHECK(omit_parentheses(ident) == Permutation::identity(4));

  const CyclicForm pi_4235{{{1, 14, 13, 12}, {2, 11}, {3, 10, 9}, {4, 8, 7, 6, 5}}};
  CHECK(omit_parentheses(pi_4235) ==
        Permutation({1, 14, 13, 12, 2, 11, 3, 10, 9, 4, 8, 7, 6, 5}));

  // Non-standard forms are rejected, not normalized.
  CHECK_THROWS_AS(omit_parentheses(CyclicForm{{{2, 1}, {3}}}), std::invalid_argument);
  CHECK_THROWS_AS(omit_parentheses(CyclicForm{{{3}, {1, 2}}}), std::invalid_argument);
  CHECK_THROWS_AS(omit_parentheses(CyclicForm{{{1, 2}, {1, 3}}}), std::invalid_argument);
}

TEST_CASE("composition type") {
  CHECK(composition_type(Permutation({2, 1, 3, 5, 4})).parts() == std::vector<int>{2, 1, 2});
  CHECK(composition_type(Permutation::identity(3)).parts() == std::vector<int>{1, 1, 1});
  CHECK(composition_type(Permutation({3, 1, 2, 5, 4})).parts() == std::vector<int>{3, 2});
}

TEST_CASE("apply transposition on the right") {
  CHECK(apply_transposition_right(Permutation({1, 2, 3, 4, 5, 6}), Transposition(2, 3)) ==
        Permutation({1, 3, 2, 4, 5, 6}));
  CHECK(apply_transposition_right(Permutation({1, 3, 2, 4, 5, 6}), Transposition(2, 3)) ==
        Permutation({1, 2, 3, 4, 5, 6}));
  CHECK(apply_transposition_right(Permutation({1, 6, 5, 2, 3, 4}), Transposition(4, 5)) ==
        Permutation({1, 6, 5, 3, 2, 4}));
  CHECK_THROWS_AS(apply_transposition_right(Permutation({2, 1}), Transposition(2, 3)),
                  std::out_of_range);
}

TEST_CASE("inverse") {
  CHECK(inverse(Permutation::identity(4)) == Permutation::identity(4));
  CHECK(inverse(Permutation({2, 3, 1})) == Permutation({3, 1, 2}));
  CHECK(inverse(Permutation({1, 6, 5, 2, 3, 4})) == Permutation({1, 4, 5, 6, 3, 2}));
}

TEST_CASE("omit_parentheses iterated reaches the identity within n steps") {
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& p : symmetric_group(n)) {
      Permutation cur = p;
      int steps = 0;
      while (cur != Permutation::identity(n)) {
        cur = omit_parentheses(standard_cyclic_form(cur));
        REQUIRE(++steps <= n);
      }
    }
  }
}

TEST_CASE("standard form round-trips through cycle composition") {
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& p : symmetric_group(n)) {
      REQUIRE(compose_cycles(standard_cyclic_form(p)) == p);
      REQUIRE(is_standard_form(standard_cyclic_form(p)));
      REQUIRE(composition_type(p).n() == n);
    }
  }
}

TEST_CASE("right transpositions change the inversion count by an odd amount") {
  for (const Permutation& p : symmetric_group(4)) {
    for (int i = 1; i <= 4; ++i) {
      for (int j = i + 1; j <= 4; ++j) {
        const int delta = inversions(apply_transposition_right(p, Transposition(i, j))) -
                          inversions(p);
        REQUIRE((delta % 2 != 0));
      }
    }
  }
}

TEST_CASE("composition parsing and rendering") {
  CHECK(parse_composition("4,1,1").parts() == std::vector<int>{4, 1, 1});
  CHECK(to_string(parse_composition("2,1,2")) == "(2,1,2)");
  CHECK_THROWS_AS(parse_composition(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_composition("4,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_composition("0,2"), std::invalid_argument);
}

TEST_CASE("compositions of n enumerate in lexicographic order") {
  const auto comps = compositions_of(4);
  CHECK(comps.size() == 8);
  CHECK(comps.front().parts() == std::vector<int>{1, 1, 1, 1});
  CHECK(comps.back().parts() == std::vector<int>{4});
  for (size_t i = 1; i < comps.size(); ++i) {
    CHECK(comps[i - 1] < comps[i]);
  }
}
