// Acceptance suite: runs every top-level verification criterion and prints
// one PASS/FAIL line per criterion.  Exit status is non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "omega/bruhat.hpp"
#include "omega/checks.hpp"
#include "omega/clambda.hpp"
#include "omega/permutation.hpp"
#include "omega/poset.hpp"

using namespace omega;

namespace {

Composition comp(std::vector<int> parts) { return Composition(std::move(parts)); }

bool sweep(int n_lo, int n_hi, checks::CheckResult (*check)(const Composition&, int),
           std::string& detail) {
  for (int n = n_lo; n <= n_hi; ++n) {
    for (const Composition& lambda : compositions_of(n)) {
      const checks::CheckResult result = check(lambda, n_hi);
      if (!result.pass) {
        detail = "lambda=" + to_string(lambda) + ": " + result.detail;
        return false;
      }
    }
  }
  return true;
}

bool criterion_gen_function_reproduction(std::string& detail) {
  if (gen_function(comp({4, 1, 1})) != QPolynomial({1, 3, 6, 9, 11, 11, 9, 6, 3, 1})) {
    detail = "(4,1,1) expansion mismatch";
    return false;
  }
  if (gen_function(comp({3, 1, 1, 1})) != QPolynomial({1, 2, 3, 4, 4, 3, 2, 1})) {
    detail = "(3,1,1,1) expansion mismatch";
    return false;
  }
  return true;
}

bool criterion_chain_reproduction(std::string& detail) {
  const std::vector<Permutation> expected{
      Permutation({1, 2, 3, 4, 5, 6}), Permutation({1, 3, 2, 4, 5, 6}),
      Permutation({1, 4, 2, 3, 5, 6}), Permutation({1, 5, 2, 3, 4, 6}),
      Permutation({1, 6, 2, 3, 4, 5})};
  auto got = enumerate_poset(comp({2, 1, 1, 1, 1}));
  std::stable_sort(got.begin(), got.end(), [](const Permutation& a, const Permutation& b) {
    return inversions(a) < inversions(b);
  });
  if (got != expected) {
    detail = "chain differs from the displayed one";
    return false;
  }
  return true;
}

bool criterion_gen_function_oracle(std::string& detail) {
  return sweep(2, 7, checks::genfunc, detail);
}

bool criterion_bounded_graded(std::string& detail) {
  return sweep(1, 6, checks::graded, detail);
}

bool criterion_el_shellability(std::string& detail) {
  if (!sweep(1, 5, checks::el, detail)) return false;
  for (const auto& parts :
       std::vector<std::vector<int>>{{4, 1, 1}, {3, 1, 2}, {2, 2, 2}}) {
    const Composition lambda = comp(parts);
    const checks::CheckResult result = checks::el(lambda, 6);
    if (!result.pass) {
      detail = "lambda=" + to_string(lambda) + ": " + result.detail;
      return false;
    }
  }
  return true;
}

bool criterion_rising_chain(std::string& detail) {
  return sweep(1, 5, checks::rising_chain, detail);
}

bool criterion_decomposition(std::string& detail) {
  return sweep(2, 7, checks::decomposition, detail);
}

bool criterion_mobius_topology(std::string& detail) {
  return sweep(1, 6, checks::mobius_topology, detail);
}

bool criterion_sphere_isomorphism(std::string& detail) {
  for (int a = 0; a <= 2; ++a) {
    for (int b = 2; b <= 4; ++b) {
      std::vector<int> parts(static_cast<size_t>(a), 1);
      parts.push_back(b);
      parts.push_back(1);
      const Composition lambda = comp(parts);
      const checks::CheckResult result = checks::sphere_isomorphism(lambda, lambda.n());
      if (!result.pass || result.detail.starts_with("skipped")) {
        detail = "lambda=" + to_string(lambda) + ": " + result.detail;
        return false;
      }
    }
  }
  return true;
}

bool criterion_rank_selected(std::string& detail) {
  for (const auto& parts : std::vector<std::vector<int>>{{3, 1, 1, 1}, {4, 1, 1}}) {
    const Composition lambda = comp(parts);
    const checks::CheckResult result = checks::rank_selected(lambda, lambda.n());
    if (!result.pass) {
      detail = "lambda=" + to_string(lambda) + ": " + result.detail;
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    bool (*run)(std::string&);
  };
  const std::vector<Criterion> criteria{
      {1, "generating-function reproduction", criterion_gen_function_reproduction},
      {2, "chain reproduction", criterion_chain_reproduction},
      {3, "generating-function oracle equivalence (n <= 7)", criterion_gen_function_oracle},
      {4, "bounded graded posets (n <= 6)", criterion_bounded_graded},
      {5, "EL-shellability (n <= 5, spot checks at 6)", criterion_el_shellability},
      {6, "rising-chain containment (n <= 5)", criterion_rising_chain},
      {7, "shifted-copy decomposition (n <= 7)", criterion_decomposition},
      {8, "topology via Mobius numbers (n <= 6)", criterion_mobius_topology},
      {9, "sphere order isomorphism (b <= 4, a <= 2)", criterion_sphere_isomorphism},
      {10, "rank-selected Mobius identity", criterion_rank_selected},
  };

  bool all_pass = true;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    const bool pass = criterion.run(detail);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::cout << "criterion " << criterion.id << " (" << criterion.name
              << "): " << (pass ? "PASS" : "FAIL");
    if (!pass) std::cout << " [" << detail << "]";
    std::cout << " [" << elapsed << " ms]\n";
    all_pass = all_pass && pass;
  }
  return all_pass ? 0 : 1;
}
