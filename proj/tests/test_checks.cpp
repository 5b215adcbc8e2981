#include "omega/checks.hpp"

#include "doctest.h"
#include "omega/clambda.hpp"

using namespace omega;

namespace {

Composition comp(std::vector<int> parts) { return Composition(std::move(parts)); }

}  // namespace

TEST_CASE("single-composition check entry points") {
  CHECK(checks::graded(comp({3, 1, 2}), 6).pass);
  CHECK(checks::genfunc(comp({4, 2}), 6).pass);
  CHECK(checks::el(comp({2, 2}), 4).pass);
  CHECK(checks::el(comp({1, 1, 1}), 3).detail == "degenerate");
  CHECK(checks::rising_chain(comp({2, 1, 2}), 5).pass);
  CHECK(checks::decomposition(comp({2, 2, 1}), 5).pass);
  CHECK(checks::decomposition(comp({2, 2}), 4).detail == "skipped: final part exceeds 1");
  CHECK(checks::mobius_topology(comp({2, 3}), 5).pass);
  CHECK(checks::rank_selected(comp({2, 1, 1}), 4).pass);
  CHECK(checks::sphere_isomorphism(comp({1, 3, 1}), 5).pass);
  CHECK(checks::sphere_isomorphism(comp({2, 2, 1}), 5).detail ==
        "skipped: not a sphere class");
  CHECK(checks::all(comp({2, 1, 1}), 4).pass);
}
