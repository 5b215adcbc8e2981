#include "omega/checks.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "omega/bruhat.hpp"
#include "omega/clambda.hpp"
#include "omega/poset.hpp"

namespace omega::checks {

namespace {

CheckResult ok(std::string detail = "ok") { return {true, std::move(detail)}; }

CheckResult fail(std::string detail) { return {false, std::move(detail)}; }

}  // namespace

CheckResult graded(const Composition& lambda, int max_n) {
  const auto elements = enumerate_poset(lambda, max_n);
  GradedPoset poset = GradedPoset::build(elements);  // throws on violations

  if (poset.element(poset.min_index()) != Permutation::identity(lambda.n())) {
    return fail("minimum is not the identity");
  }
  if (poset.element(poset.max_index()) != max_element_of(lambda)) {
    return fail("maximum differs from the closed-form construction");
  }
  if (poset.length() != length_formula(lambda)) {
    return fail("poset length differs from the length formula");
  }
  // Covers step one rank at a time by construction, so full-length
  // maximal chains need every interior element to have covers both ways.
  std::vector<char> has_up(static_cast<size_t>(poset.size()), 0);
  std::vector<char> has_down(static_cast<size_t>(poset.size()), 0);
  for (const CoverEdge& e : poset.covers()) {
    has_up[static_cast<size_t>(e.lower)] = 1;
    has_down[static_cast<size_t>(e.upper)] = 1;
  }
  for (int i = 0; i < poset.size(); ++i) {
    if (i != poset.max_index() && !has_up[static_cast<size_t>(i)]) {
      return fail("element below the top has no upper cover");
    }
    if (i != poset.min_index() && !has_down[static_cast<size_t>(i)]) {
      return fail("element above the bottom has no lower cover");
    }
  }
  for (const Permutation& p : elements) {
    if (!bruhat_leq(Permutation::identity(lambda.n()), p) ||
        !bruhat_leq(p, max_element_of(lambda))) {
      return fail("element escapes the bounds");
    }
  }
  return ok();
}

CheckResult genfunc(const Composition& lambda, int max_n) {
  const QPolynomial g = gen_function(lambda);
  const QPolynomial brute = gen_function_bruteforce(lambda, max_n);
  if (g != brute) {
    return fail("factored form " + g.to_string() + " != brute force " + brute.to_string());
  }
  if (!g.is_palindromic()) return fail("coefficients are not palindromic");
  if (!g.is_unimodal()) return fail("coefficients are not unimodal");
  const int len = length_formula(lambda);
  if (g.degree() != len) return fail("degree differs from the length formula");
  if (inversions(max_element_of(lambda)) != len) {
    return fail("maximum inversion count differs from the length formula");
  }
  const auto factors = q_factor_sequence(lambda);
  for (size_t i = 1; i < factors.size(); ++i) {
    if (factors[i] <= factors[i - 1]) return fail("factor sequence is not strictly increasing");
  }
  if (!factors.empty()) {
    if (factors.front() < 2 || factors.back() > lambda.n() - 1) {
      return fail("factor outside the 2..n-1 window");
    }
    // Leading singleton cycles pin a prefix of the one-line word, so the
    // splitting recursion bottoms out at n minus that prefix.
    int leading_ones = 0;
    while (leading_ones < lambda.num_parts() && lambda.part(leading_ones + 1) == 1) {
      ++leading_ones;
    }
    if (factors.back() != lambda.n() - leading_ones - 1) {
      return fail("final factor disagrees with the splitting recursion depth");
    }
  }
  return ok(g.to_string());
}

CheckResult el(const Composition& lambda, int max_n) {
  const auto elements = enumerate_poset(lambda, max_n);
  if (elements.size() == 1) return ok("degenerate");
  GradedPoset poset = GradedPoset::build(elements);
  for (int bottom = 0; bottom < poset.size(); ++bottom) {
    for (int top = 0; top < poset.size(); ++top) {
      if (bottom == top || !poset.leq(bottom, top)) continue;
      const ELReport report = verify_el(poset, bottom, top);
      if (!report.pass()) {
        std::ostringstream why;
        why << "interval [" << to_string(poset.element(bottom)) << ", "
            << to_string(poset.element(top)) << "] has " << report.rising_chains.size()
            << " rising chains";
        if (!report.lex_smallest_is_rising) why << " (lex-smallest not rising)";
        return fail(why.str());
      }
    }
  }
  return ok();
}

CheckResult rising_chain(const Composition& lambda, int max_n) {
  if (!verify_rising_chain_containment(lambda, max_n)) {
    return fail("a lex-smallest rising chain leaves the poset");
  }
  return ok();
}

CheckResult decomposition(const Composition& lambda, int max_n) {
  const int k = lambda.num_parts();
  if (lambda.part(k) != 1) return ok("skipped: final part exceeds 1");
  if (trailing_ones(lambda) == k) return ok("skipped: all parts equal 1");

  const CopyDecomposition dec = decompose(lambda, max_n);
  int j = 0;
  for (int r = k; r >= 1; --r) {
    if (lambda.part(r) > 1) {
      j = r;
      break;
    }
  }
  if (static_cast<int>(dec.copies.size()) != k - j + 1) {
    return fail("copy count is not k-j+1");
  }

  const auto all_elements = enumerate_poset(lambda, max_n);
  size_t total = 0;
  for (const auto& copy : dec.copies) total += copy.size();
  if (total != all_elements.size()) return fail("copies do not exhaust the poset");
  std::set<Permutation> seen;
  for (const auto& copy : dec.copies) seen.insert(copy.begin(), copy.end());
  if (seen.size() != all_elements.size()) return fail("copies overlap");

  // Copy 0 is the natural embedding of the split poset.
  const auto base_elements = enumerate_poset(dec.base, max_n);
  if (dec.copies.front() != base_elements) {
    return fail("copy 0 differs from the split poset");
  }

  // Each next copy is the image of the previous one under the shift swap,
  // raising every rank by one and preserving the order both ways.
  const int t = dec.shift_position;
  for (size_t i = 0; i + 1 < dec.copies.size(); ++i) {
    const Transposition shift(t, t + 1 + static_cast<int>(i));
    std::vector<Permutation> image;
    for (const Permutation& p : dec.copies[i]) {
      if (p.at(t) >= p.at(t + 1 + static_cast<int>(i))) {
        return fail("shift positions are not ascending before the swap");
      }
      Permutation q = apply_transposition_right(p, shift);
      if (inversions(q) != inversions(p) + 1) {
        return fail("shift does not raise the rank by one");
      }
      image.push_back(std::move(q));
    }
    std::vector<Permutation> expected = dec.copies[i + 1];
    std::vector<Permutation> got = image;
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    if (got != expected) return fail("shift image differs from the next copy");
    for (size_t a = 0; a < dec.copies[i].size(); ++a) {
      for (size_t b = 0; b < dec.copies[i].size(); ++b) {
        if (bruhat_leq(dec.copies[i][a], dec.copies[i][b]) !=
            bruhat_leq(image[a], image[b])) {
          return fail("shift is not an order isomorphism");
        }
      }
    }
  }
  return ok();
}

CheckResult mobius_topology(const Composition& lambda, int max_n) {
  const auto elements = enumerate_poset(lambda, max_n);
  GradedPoset poset = GradedPoset::build(elements);
  const std::int64_t mu = reduced_euler_characteristic(poset);
  const TopologyClass topo = classify_topology(lambda);
  switch (topo.kind) {
    case TopologyClass::Kind::point:
      if (poset.size() != 1) return fail("point class on a non-singleton poset");
      if (mu != 1) return fail("degenerate mobius is not 1");
      return ok("mu=1 (degenerate)");
    case TopologyClass::Kind::ball:
      if (mu != 0) return fail("ball class but mobius is " + std::to_string(mu));
      return ok("mu=0");
    case TopologyClass::Kind::sphere: {
      const std::int64_t expected = poset.length() % 2 == 0 ? 1 : -1;
      if (mu != expected) {
        return fail("sphere class but mobius is " + std::to_string(mu));
      }
      return ok("mu=" + std::to_string(mu));
    }
  }
  return fail("unreachable");
}

CheckResult rank_selected(const Composition& lambda, int max_n) {
  const auto elements = enumerate_poset(lambda, max_n);
  GradedPoset poset = GradedPoset::build(elements);
  const int len = poset.length();
  if (len < 1) return ok("degenerate");
  const int choices = len - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << choices); ++mask) {
    std::set<int> ranks;
    for (int r = 1; r <= choices; ++r) {
      if (mask & (std::uint64_t{1} << (r - 1))) ranks.insert(r);
    }
    if (!rank_selected_mobius_check(poset, ranks)) {
      std::ostringstream why;
      why << "identity fails for S = {";
      bool first = true;
      for (int r : ranks) {
        if (!first) why << ',';
        first = false;
        why << r;
      }
      why << '}';
      return fail(why.str());
    }
  }
  return ok();
}

CheckResult sphere_isomorphism(const Composition& lambda, int max_n) {
  const TopologyClass topo = classify_topology(lambda);
  if (topo.kind != TopologyClass::Kind::sphere) {
    return ok("skipped: not a sphere class");
  }
  const Composition norm = normalize(lambda);
  const int b = topo.sphere_order;
  const int a = norm.num_parts() - 2;  // forced prefix [1,...,a,a+1]

  const auto elements = enumerate_poset(norm, max_n);
  std::set<Permutation> images;
  std::vector<Permutation> mapped;
  for (const Permutation& p : elements) {
    for (int pos = 1; pos <= a + 1; ++pos) {
      if (p.at(pos) != pos) return fail("prefix is not fixed");
    }
    std::vector<int> word;
    for (int pos = a + 2; pos <= norm.n(); ++pos) {
      word.push_back(p.at(pos) - (a + 1));
    }
    Permutation image(std::move(word));
    images.insert(image);
    mapped.push_back(std::move(image));
  }
  // Onto all of S_b.
  std::int64_t expected_size = 1;
  for (int m = 2; m <= b; ++m) expected_size *= m;
  if (static_cast<std::int64_t>(images.size()) != expected_size ||
      images.size() != elements.size()) {
    return fail("relabeled image is not all of S_b");
  }
  for (size_t x = 0; x < elements.size(); ++x) {
    for (size_t y = 0; y < elements.size(); ++y) {
      if (bruhat_leq(elements[x], elements[y]) != bruhat_leq(mapped[x], mapped[y])) {
        return fail("relabeling is not an order isomorphism");
      }
    }
  }
  return ok("isomorphic to the Bruhat order on S_" + std::to_string(b));
}

CheckResult all(const Composition& lambda, int max_n) {
  struct Named {
    const char* name;
    CheckResult (*run)(const Composition&, int);
  };
  const Named suite[] = {
      {"graded", graded},
      {"genfunc", genfunc},
      {"el", el},
      {"rising-chain", rising_chain},
      {"decompose", decomposition},
      {"mobius", mobius_topology},
      {"rank-selected", rank_selected},
      {"sphere-iso", sphere_isomorphism},
  };
  for (const auto& entry : suite) {
    const CheckResult result = entry.run(lambda, max_n);
    if (!result.pass) {
      return fail(std::string(entry.name) + ": " + result.detail);
    }
  }
  return ok();
}

}  // namespace omega::checks
