#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "omega/permutation.hpp"

namespace omega {

// Elements of S_n larger than this are off limits for the closure oracle.
inline constexpr int kDefaultOracleMaxN = 7;

// Containment ordering on integer vectors: sort both non-increasingly and
// compare coordinatewise.  Throws on length mismatch.
bool containment_leq(std::span<const int> a, std::span<const int> b);

// Bruhat-Chevalley order via the truncation criterion: v <= w iff every
// k-prefix of v is contained (in the sorted sense) in the k-prefix of w.
// Sorted prefixes are maintained incrementally, O(n^2) total.
bool bruhat_leq(const Permutation& v, const Permutation& w);

// Same criterion with a fresh sort per truncation.  Slower; kept as a
// second route for cross-checking the incremental version.
bool bruhat_leq_resort(const Permutation& v, const Permutation& w);

// If y covers x (inversion count rises by one, the words agree except at
// two positions i < j whose values are swapped with x_i < x_j), returns
// the label (i,j); otherwise nullopt.  Throws on size mismatch.
std::optional<Transposition> is_covering(const Permutation& x, const Permutation& y);

// All y covering x in S_n, paired with their labels, in increasing label
// order.
std::vector<std::pair<Transposition, Permutation>> upper_covers(const Permutation& x);

// Independent order oracle: reachability of w from x by covering moves
// alone, breadth-first.  Throws if n exceeds max_n.
bool bruhat_leq_oracle(const Permutation& v, const Permutation& w,
                       int max_n = kDefaultOracleMaxN);

}  // namespace omega
