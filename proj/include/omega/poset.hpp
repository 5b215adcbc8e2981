#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "omega/clambda.hpp"
#include "omega/permutation.hpp"

namespace omega {

struct CoverEdge {
  int lower = 0;
  int upper = 0;
  Transposition label{1, 2};

  bool operator==(const CoverEdge&) const = default;
};

// A finite graded bounded poset of permutations under the Bruhat-Chevalley
// order, materialized with its Hasse diagram and transposition edge
// labels.  Construction certifies boundedness and gradedness and throws
// when either fails.  Immutable after build.
class GradedPoset {
 public:
  static GradedPoset build(std::vector<Permutation> elements);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(int idx) const { return elements_[static_cast<size_t>(idx)]; }
  int rank(int idx) const { return ranks_[static_cast<size_t>(idx)]; }
  const std::vector<int>& ranks() const { return ranks_; }
  int length() const { return ranks_.back(); }
  const std::vector<CoverEdge>& covers() const { return covers_; }
  int min_index() const { return 0; }
  int max_index() const { return size() - 1; }

  bool leq(int a, int b) const { return leq_[static_cast<size_t>(a)][static_cast<size_t>(b)] != 0; }

  // Indices covering idx, in increasing label order.
  const std::vector<int>& upper_covers_of(int idx) const {
    return up_[static_cast<size_t>(idx)];
  }

  Transposition cover_label(int lo, int hi) const;

  // Elements per rank level, bottom to top.
  std::vector<int> rank_sizes() const;

  int index_of(const Permutation& p) const;  // -1 when absent

 private:
  GradedPoset() = default;

  std::vector<Permutation> elements_;  // sorted by (rank, word)
  std::vector<int> ranks_;
  std::vector<CoverEdge> covers_;
  std::vector<std::vector<char>> leq_;
  std::vector<std::vector<int>> up_;
  std::map<std::pair<int, int>, Transposition> labels_;
};

struct LabeledChain {
  std::vector<int> vertices;
  std::vector<Transposition> labels;
};

// All saturated chains from bottom to top with their label words.  Throws
// when the endpoints are incomparable.
std::vector<LabeledChain> maximal_chains(const GradedPoset& poset, int bottom, int top);

// Mobius value of the closed interval [bottom, top] by the defining
// recursion, computed over the interval in rank order.
std::int64_t mobius(const GradedPoset& poset, int bottom, int top);

// mobius(0,1); for a singleton poset this degenerates to 1.
std::int64_t reduced_euler_characteristic(const GradedPoset& poset);

struct ELReport {
  int bottom = 0;
  int top = 0;
  std::int64_t chain_count = 0;
  std::vector<LabeledChain> rising_chains;
  bool lex_smallest_is_rising = false;

  bool pass() const { return rising_chains.size() == 1 && lex_smallest_is_rising; }
};

// Checks the EL condition on one interval: exactly one maximal chain with
// a weakly increasing label word, and that word lexicographically first.
// Throws on incomparable endpoints or a zero-length interval.
ELReport verify_el(const GradedPoset& poset, int bottom, int top);

// For every comparable pair in C_lambda, walks the lexicographically
// smallest rising chain of the ambient S_n interval (greedy smallest
// label staying below the top) and checks that every vertex stays inside
// C_lambda.
bool verify_rising_chain_containment(const Composition& lambda,
                                     int max_n = kDefaultEnumMaxN);

// Rank-selected Mobius identity: (-1)^{|S|-1} mu_S equals the number of
// maximal chains whose label word has descent set exactly S.
bool rank_selected_mobius_check(const GradedPoset& poset, const std::set<int>& ranks);

}  // namespace omega
