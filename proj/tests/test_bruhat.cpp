#include "omega/bruhat.hpp"

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace omega;
using omega::testing::symmetric_group;

TEST_CASE("containment ordering") {
  const std::vector<int> x{4, 5, 0, 3, 1};
  const std::vector<int> y{4, 2, 5, 5, 1};
  CHECK(containment_leq(x, y));
  CHECK(containment_leq(x, x));
  CHECK_FALSE(containment_leq(std::vector<int>{5, 0, 0}, std::vector<int>{1, 1, 1}));
  CHECK_THROWS_AS(containment_leq(std::vector<int>{1}, std::vector<int>{1, 2}),
                  std::invalid_argument);
}

TEST_CASE("bruhat order via truncations") {
  CHECK(bruhat_leq(Permutation({4, 1, 2, 3, 5}), Permutation({4, 3, 2, 5, 1})));
  const Permutation v({3, 1, 2});
  CHECK(bruhat_leq(v, v));
  CHECK_FALSE(bruhat_leq(Permutation({2, 1, 3}), Permutation({1, 3, 2})));
  CHECK_FALSE(bruhat_leq(Permutation({1, 3, 2}), Permutation({2, 1, 3})));
  CHECK_THROWS_AS(bruhat_leq(Permutation({1, 2}), Permutation({1, 2, 3})),
                  std::invalid_argument);
}

TEST_CASE("incremental and re-sorting routes agree") {
  for (const Permutation& v : symmetric_group(5)) {
    for (const Permutation& w : symmetric_group(5)) {
      REQUIRE(bruhat_leq(v, w) == bruhat_leq_resort(v, w));
    }
  }
}

TEST_CASE("covering relations") {
  const auto t = is_covering(Permutation({1, 2, 3, 4, 5, 6}), Permutation({1, 3, 2, 4, 5, 6}));
  REQUIRE(t.has_value());
  CHECK(*t == Transposition(2, 3));

  const Permutation x({2, 1, 3});
  CHECK_FALSE(is_covering(x, x).has_value());
  CHECK_FALSE(is_covering(Permutation({1, 2, 3, 4, 5, 6}), Permutation({1, 4, 3, 2, 5, 6}))
                  .has_value());
}

TEST_CASE("cover labels reproduce the upper element and skip intermediate values") {
  for (const Permutation& x : symmetric_group(5)) {
    for (const Permutation& y : symmetric_group(5)) {
      const auto t = is_covering(x, y);
      if (!t) continue;
      REQUIRE(apply_transposition_right(x, *t) == y);
      REQUIRE(x.at(t->i) < x.at(t->j));
      for (int between = t->i + 1; between < t->j; ++between) {
        REQUIRE_FALSE((x.at(t->i) < x.at(between) && x.at(between) < x.at(t->j)));
      }
    }
  }
}

TEST_CASE("upper covers are exactly the covering relations, label-sorted") {
  for (const Permutation& x : symmetric_group(4)) {
    const auto covers = upper_covers(x);
    for (size_t i = 1; i < covers.size(); ++i) {
      REQUIRE(covers[i - 1].first < covers[i].first);
    }
    size_t found = 0;
    for (const Permutation& y : symmetric_group(4)) {
      if (is_covering(x, y)) ++found;
    }
    REQUIRE(covers.size() == found);
  }
}

TEST_CASE("closure oracle matches the truncation criterion on S_4 and S_5") {
  for (int n = 4; n <= 5; ++n) {
    for (const Permutation& v : symmetric_group(n)) {
      for (const Permutation& w : symmetric_group(n)) {
        REQUIRE(bruhat_leq(v, w) == bruhat_leq_oracle(v, w));
      }
    }
  }
}

TEST_CASE("oracle basics") {
  const Permutation top({4, 3, 2, 5, 1});
  CHECK(bruhat_leq_oracle(Permutation::identity(5), top));
  CHECK(bruhat_leq_oracle(Permutation({4, 1, 2, 3, 5}), top));
  CHECK_THROWS_AS(bruhat_leq_oracle(Permutation::identity(8), Permutation::identity(8)),
                  std::invalid_argument);
}

TEST_CASE("bruhat order is a partial order") {
  const auto group = symmetric_group(4);
  const size_t m = group.size();
  std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
  for (size_t a = 0; a < m; ++a) {
    for (size_t b = 0; b < m; ++b) {
      leq[a][b] = bruhat_leq(group[a], group[b]) ? 1 : 0;
    }
  }
  for (size_t a = 0; a < m; ++a) {
    REQUIRE(leq[a][a] == 1);
    for (size_t b = 0; b < m; ++b) {
      if (a != b) REQUIRE_FALSE((leq[a][b] == 1 && leq[b][a] == 1));
      for (size_t c = 0; c < m; ++c) {
        if (leq[a][b] && leq[b][c]) REQUIRE(leq[a][c] == 1);
      }
    }
  }
}

TEST_CASE("inversion is order-preserving") {
  for (int n = 3; n <= 5; ++n) {
    for (const Permutation& v : symmetric_group(n)) {
      for (const Permutation& w : symmetric_group(n)) {
        REQUIRE(bruhat_leq(v, w) == bruhat_leq(inverse(v), inverse(w)));
      }
    }
  }
}
