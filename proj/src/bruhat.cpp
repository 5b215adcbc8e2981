#include "omega/bruhat.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

namespace omega {

bool containment_leq(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("containment_leq requires equal lengths");
  }
  std::vector<int> sa(a.begin(), a.end());
  std::vector<int> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end(), std::greater<int>());
  std::sort(sb.begin(), sb.end(), std::greater<int>());
  for (size_t i = 0; i < sa.size(); ++i) {
    if (sa[i] > sb[i]) return false;
  }
  return true;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  const int n = v.size();
  if (n != w.size()) {
    throw std::invalid_argument("bruhat_leq requires permutations of equal size");
  }
  // Sorted (non-increasing) prefixes, grown by one insertion per step.
  std::vector<int> pv, pw;
  pv.reserve(static_cast<size_t>(n));
  pw.reserve(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const int av = v.at(k);
    const int aw = w.at(k);
    pv.insert(std::lower_bound(pv.begin(), pv.end(), av, std::greater<int>()), av);
    pw.insert(std::lower_bound(pw.begin(), pw.end(), aw, std::greater<int>()), aw);
    for (int i = 0; i < k; ++i) {
      if (pv[static_cast<size_t>(i)] > pw[static_cast<size_t>(i)]) return false;
    }
  }
  return true;
}

bool bruhat_leq_resort(const Permutation& v, const Permutation& w) {
  const int n = v.size();
  if (n != w.size()) {
    throw std::invalid_argument("bruhat_leq requires permutations of equal size");
  }
  for (int k = 1; k <= n; ++k) {
    std::span<const int> pv(v.word().data(), static_cast<size_t>(k));
    std::span<const int> pw(w.word().data(), static_cast<size_t>(k));
    if (!containment_leq(pv, pw)) return false;
  }
  return true;
}

std::optional<Transposition> is_covering(const Permutation& x, const Permutation& y) {
  const int n = x.size();
  if (n != y.size()) {
    throw std::invalid_argument("is_covering requires permutations of equal size");
  }
  std::vector<int> diff;
  for (int pos = 1; pos <= n; ++pos) {
    if (x.at(pos) != y.at(pos)) diff.push_back(pos);
  }
  if (diff.size() != 2) return std::nullopt;
  const int i = diff[0], j = diff[1];
  if (x.at(i) != y.at(j) || x.at(j) != y.at(i) || x.at(i) >= x.at(j)) {
    return std::nullopt;
  }
  if (inversions(y) != inversions(x) + 1) return std::nullopt;
  return Transposition(i, j);
}

std::vector<std::pair<Transposition, Permutation>> upper_covers(const Permutation& x) {
  const int n = x.size();
  std::vector<std::pair<Transposition, Permutation>> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (x.at(i) >= x.at(j)) continue;
      Transposition t(i, j);
      Permutation y = apply_transposition_right(x, t);
      if (inversions(y) == inversions(x) + 1) {
        out.emplace_back(t, std::move(y));
      }
    }
  }
  // Already label-sorted: the (i,j) loop runs in lexicographic order.
  return out;
}

bool bruhat_leq_oracle(const Permutation& v, const Permutation& w, int max_n) {
  const int n = v.size();
  if (n != w.size()) {
    throw std::invalid_argument("oracle requires permutations of equal size");
  }
  if (n > max_n) {
    throw std::invalid_argument("oracle bound exceeded");
  }
  if (v == w) return true;
  const int target_inv = inversions(w);
  std::set<Permutation> visited{v};
  std::queue<Permutation> frontier;
  frontier.push(v);
  while (!frontier.empty()) {
    Permutation x = frontier.front();
    frontier.pop();
    if (inversions(x) >= target_inv) continue;
    for (auto& [label, y] : upper_covers(x)) {
      (void)label;
      if (y == w) return true;
      if (inversions(y) <= target_inv && visited.insert(y).second) {
        frontier.push(y);
      }
    }
  }
  return false;
}

}  // namespace omega
