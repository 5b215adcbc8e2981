#include "omega/poset.hpp"

#include <algorithm>
#include <stdexcept>

#include "omega/bruhat.hpp"

namespace omega {

GradedPoset GradedPoset::build(std::vector<Permutation> elements) {
  if (elements.empty()) {
    throw std::invalid_argument("poset needs at least one element");
  }
  GradedPoset poset;
  poset.elements_ = std::move(elements);

  int min_inv = inversions(poset.elements_.front());
  for (const Permutation& p : poset.elements_) {
    min_inv = std::min(min_inv, inversions(p));
  }
  std::sort(poset.elements_.begin(), poset.elements_.end(),
            [&](const Permutation& a, const Permutation& b) {
              const int ra = inversions(a), rb = inversions(b);
              return ra != rb ? ra < rb : a < b;
            });
  const size_t m = poset.elements_.size();
  poset.ranks_.resize(m);
  for (size_t i = 0; i < m; ++i) {
    poset.ranks_[i] = inversions(poset.elements_[i]) - min_inv;
  }
  for (size_t i = 1; i < m; ++i) {
    if (poset.elements_[i] == poset.elements_[i - 1]) {
      throw std::invalid_argument("duplicate element");
    }
  }

  poset.leq_.assign(m, std::vector<char>(m, 0));
  for (size_t a = 0; a < m; ++a) {
    for (size_t b = 0; b < m; ++b) {
      if (poset.ranks_[a] <= poset.ranks_[b] &&
          bruhat_leq(poset.elements_[a], poset.elements_[b])) {
        poset.leq_[a][b] = 1;
      }
    }
  }

  // Bounded: the unique rank-0 element must sit below everything and the
  // unique top-rank element above everything.
  const int top_rank = poset.ranks_.back();
  if (m > 1 && poset.ranks_[1] == 0) {
    throw std::runtime_error("no unique minimum");
  }
  if (m > 1 && poset.ranks_[m - 2] == top_rank) {
    throw std::runtime_error("no unique maximum");
  }
  for (size_t i = 0; i < m; ++i) {
    if (!poset.leq_[0][i] || !poset.leq_[i][m - 1]) {
      throw std::runtime_error("extremal element is not comparable to all elements");
    }
  }

  // Hasse edges: comparable rank-adjacent pairs.  Each must be a genuine
  // labeled S_n covering, and the cover closure must reproduce the order
  // relation; together these certify gradedness.
  poset.up_.assign(m, {});
  std::vector<std::vector<std::pair<Transposition, int>>> labeled_up(m);
  for (size_t a = 0; a < m; ++a) {
    for (size_t b = 0; b < m; ++b) {
      if (poset.ranks_[b] != poset.ranks_[a] + 1 || !poset.leq_[a][b]) continue;
      const auto label = is_covering(poset.elements_[a], poset.elements_[b]);
      if (!label) {
        throw std::runtime_error("rank-adjacent comparable pair is not a covering");
      }
      poset.covers_.push_back({static_cast<int>(a), static_cast<int>(b), *label});
      poset.labels_.emplace(std::pair<int, int>(static_cast<int>(a), static_cast<int>(b)),
                            *label);
      labeled_up[a].emplace_back(*label, static_cast<int>(b));
    }
  }
  for (size_t a = 0; a < m; ++a) {
    std::sort(labeled_up[a].begin(), labeled_up[a].end());
    for (const auto& [label, b] : labeled_up[a]) {
      (void)label;
      poset.up_[a].push_back(b);
    }
  }

  std::vector<std::vector<char>> reach(m, std::vector<char>(m, 0));
  for (size_t a = m; a-- > 0;) {
    reach[a][a] = 1;
    for (int b : poset.up_[a]) {
      for (size_t c = 0; c < m; ++c) {
        reach[a][c] |= reach[static_cast<size_t>(b)][c];
      }
    }
  }
  if (reach != poset.leq_) {
    throw std::runtime_error("cover closure disagrees with the order relation; poset is not graded");
  }

  return poset;
}

Transposition GradedPoset::cover_label(int lo, int hi) const {
  const auto it = labels_.find({lo, hi});
  if (it == labels_.end()) {
    throw std::invalid_argument("not a cover pair");
  }
  return it->second;
}

std::vector<int> GradedPoset::rank_sizes() const {
  std::vector<int> sizes(static_cast<size_t>(length()) + 1, 0);
  for (int r : ranks_) ++sizes[static_cast<size_t>(r)];
  return sizes;
}

int GradedPoset::index_of(const Permutation& p) const {
  for (int i = 0; i < size(); ++i) {
    if (elements_[static_cast<size_t>(i)] == p) return i;
  }
  return -1;
}

std::vector<LabeledChain> maximal_chains(const GradedPoset& poset, int bottom, int top) {
  if (!poset.leq(bottom, top)) {
    throw std::invalid_argument("endpoints are incomparable");
  }
  std::vector<LabeledChain> out;
  LabeledChain current;
  current.vertices.push_back(bottom);
  auto walk = [&](auto&& self, int at) -> void {
    if (at == top) {
      out.push_back(current);
      return;
    }
    for (int next : poset.upper_covers_of(at)) {
      if (!poset.leq(next, top)) continue;
      current.vertices.push_back(next);
      current.labels.push_back(poset.cover_label(at, next));
      self(self, next);
      current.vertices.pop_back();
      current.labels.pop_back();
    }
  };
  walk(walk, bottom);
  return out;
}

std::int64_t mobius(const GradedPoset& poset, int bottom, int top) {
  if (!poset.leq(bottom, top)) {
    throw std::invalid_argument("endpoints are incomparable");
  }
  // Elements are rank-sorted, so a single ascending pass computes
  // mu(bottom, z) for the whole interval.
  std::vector<int> interval;
  for (int z = bottom; z <= top; ++z) {
    if (poset.leq(bottom, z) && poset.leq(z, top)) interval.push_back(z);
  }
  std::vector<std::int64_t> mu(interval.size(), 0);
  mu[0] = 1;
  for (size_t zi = 1; zi < interval.size(); ++zi) {
    std::int64_t sum = 0;
    for (size_t yi = 0; yi < zi; ++yi) {
      if (poset.leq(interval[yi], interval[zi])) sum += mu[yi];
    }
    mu[zi] = -sum;
  }
  return mu.back();
}

std::int64_t reduced_euler_characteristic(const GradedPoset& poset) {
  return mobius(poset, poset.min_index(), poset.max_index());
}

namespace {

bool weakly_increasing(const std::vector<Transposition>& labels) {
  for (size_t i = 1; i < labels.size(); ++i) {
    if (labels[i] < labels[i - 1]) return false;
  }
  return true;
}

}  // namespace

ELReport verify_el(const GradedPoset& poset, int bottom, int top) {
  if (!poset.leq(bottom, top)) {
    throw std::invalid_argument("endpoints are incomparable");
  }
  if (poset.rank(bottom) == poset.rank(top)) {
    throw std::invalid_argument("EL verification needs an interval of positive length");
  }
  ELReport report;
  report.bottom = bottom;
  report.top = top;

  const auto chains = maximal_chains(poset, bottom, top);
  report.chain_count = static_cast<std::int64_t>(chains.size());
  const std::vector<Transposition>* lex_smallest = nullptr;
  for (const auto& chain : chains) {
    if (weakly_increasing(chain.labels)) {
      report.rising_chains.push_back(chain);
    }
    if (lex_smallest == nullptr || chain.labels < *lex_smallest) {
      lex_smallest = &chain.labels;
    }
  }
  report.lex_smallest_is_rising =
      report.rising_chains.size() == 1 && report.rising_chains.front().labels == *lex_smallest;
  return report;
}

bool verify_rising_chain_containment(const Composition& lambda, int max_n) {
  const auto elements = enumerate_poset(lambda, max_n);
  for (const Permutation& bottom : elements) {
    for (const Permutation& top : elements) {
      if (bottom == top || !bruhat_leq(bottom, top)) continue;
      // Greedy walk of the lex-smallest rising chain in the ambient S_n
      // interval; every vertex must stay inside C_lambda.
      Permutation x = bottom;
      while (x != top) {
        bool stepped = false;
        for (const auto& [label, y] : upper_covers(x)) {
          (void)label;
          if (!bruhat_leq(y, top)) continue;
          if (!is_member(y, lambda)) return false;
          x = y;
          stepped = true;
          break;
        }
        if (!stepped) return false;  // no saturated chain reaches top
      }
    }
  }
  return true;
}

bool rank_selected_mobius_check(const GradedPoset& poset, const std::set<int>& ranks) {
  const int len = poset.length();
  for (int r : ranks) {
    if (r < 1 || r > len - 1) {
      throw std::invalid_argument("rank selection must lie strictly between the bounds");
    }
  }

  std::int64_t matching_chains = 0;
  for (const auto& chain : maximal_chains(poset, poset.min_index(), poset.max_index())) {
    std::set<int> descents;
    for (size_t i = 1; i < chain.labels.size(); ++i) {
      if (chain.labels[i] < chain.labels[i - 1]) {
        descents.insert(static_cast<int>(i));
      }
    }
    if (descents == ranks) ++matching_chains;
  }

  // mu of the rank-selected subposet with bounds adjoined, accumulated in
  // rank order against a virtual bottom.
  std::vector<int> selected;
  for (int z = 0; z < poset.size(); ++z) {
    if (ranks.count(poset.rank(z))) selected.push_back(z);
  }
  std::vector<std::int64_t> mu(selected.size(), 0);
  std::int64_t total = 0;
  for (size_t zi = 0; zi < selected.size(); ++zi) {
    std::int64_t sum = 1;  // the adjoined bottom
    for (size_t yi = 0; yi < zi; ++yi) {
      if (poset.leq(selected[yi], selected[zi])) sum += mu[yi];
    }
    mu[zi] = -sum;
    total += mu[zi];
  }
  const std::int64_t mu_top = -(1 + total);
  const std::int64_t sign = (ranks.size() % 2 == 1) ? 1 : -1;
  return sign * mu_top == matching_chains;
}

}  // namespace omega
