#pragma once

#include <string>

#include "omega/permutation.hpp"

namespace omega::checks {

struct CheckResult {
  bool pass = false;
  std::string detail;
};

// Each check verifies one of the structural claims about C_lambda on a
// concrete composition.  All are exact; failures carry a short reason.

// Bounded and graded: construction succeeds, minimum is the identity,
// maximum matches the closed-form construction, and every maximal chain
// has the predicted length.
CheckResult graded(const Composition& lambda, int max_n = kDefaultMaxN);

// Factored generating function vs. the brute-force inversion sum, plus
// palindromicity, unimodality, and the degree/length identities.
CheckResult genfunc(const Composition& lambda, int max_n = kDefaultMaxN);

// EL condition on every interval of positive length.
CheckResult el(const Composition& lambda, int max_n = kDefaultMaxN);

// The lex-smallest rising chain of every ambient interval stays in the
// poset.
CheckResult rising_chain(const Composition& lambda, int max_n = kDefaultMaxN);

// Shifted-copy decomposition: disjoint, exhaustive, copy 0 is the natural
// embedding, consecutive copies are rank-shifted order isomorphs.
// Skipped (passing) when the final part exceeds 1 or all parts are 1.
CheckResult decomposition(const Composition& lambda, int max_n = kDefaultMaxN);

// Mobius number of the full interval against the topology class: 0 for a
// ball, (-1)^length for a sphere.
CheckResult mobius_topology(const Composition& lambda, int max_n = kDefaultMaxN);

// Rank-selected Mobius / descent-set identity over every rank subset.
CheckResult rank_selected(const Composition& lambda, int max_n = kDefaultMaxN);

// For sphere-class compositions: strip the forced prefix, relabel, and
// verify an order isomorphism onto the Bruhat order of S_b elementwise.
// Skipped (passing) for non-sphere classes.
CheckResult sphere_isomorphism(const Composition& lambda, int max_n = kDefaultMaxN);

// Runs every check above in order, stopping at the first failure.
CheckResult all(const Composition& lambda, int max_n = kDefaultMaxN);

}  // namespace omega::checks
