#include "omega/clambda.hpp"

#include <algorithm>
#include <stdexcept>

namespace omega {

bool is_member(const Permutation& p, const Composition& lambda) {
  if (lambda.n() != p.size()) {
    throw std::invalid_argument("composition does not sum to the permutation size");
  }
  int pos = 1;
  int prev_leader = 0;
  for (int r = 1; r <= lambda.num_parts(); ++r) {
    const int leader = p.at(pos);
    if (leader <= prev_leader) return false;
    prev_leader = leader;
    for (int off = 1; off < lambda.part(r); ++off) {
      if (p.at(pos + off) < leader) return false;
    }
    pos += lambda.part(r);
  }
  return true;
}

namespace {

void enumerate_rec(const Composition& lambda, int cycle, std::vector<int>& unused,
                   std::vector<int>& word, std::vector<Permutation>& out) {
  if (cycle > lambda.num_parts()) {
    out.emplace_back(word);
    return;
  }
  // The next cycle is led by the smallest unused value; the remaining
  // entries range over ordered selections of what is left.
  const int leader = *std::min_element(unused.begin(), unused.end());
  word.push_back(leader);
  std::erase(unused, leader);

  const int tail = lambda.part(cycle) - 1;
  std::vector<int> chosen;
  auto pick = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      enumerate_rec(lambda, cycle + 1, unused, word, out);
      return;
    }
    const std::vector<int> candidates = unused;
    for (int v : candidates) {
      word.push_back(v);
      std::erase(unused, v);
      self(self, remaining - 1);
      unused.push_back(v);
      word.pop_back();
    }
  };
  pick(pick, tail);

  unused.push_back(leader);
  word.pop_back();
}

}  // namespace

std::vector<Permutation> enumerate_poset(const Composition& lambda, int max_n) {
  if (lambda.n() > max_n) {
    throw std::invalid_argument("enumeration bound exceeded");
  }
  std::vector<int> unused;
  for (int v = 1; v <= lambda.n(); ++v) unused.push_back(v);
  std::vector<int> word;
  std::vector<Permutation> out;
  enumerate_rec(lambda, 1, unused, word, out);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation max_element_of(const Composition& lambda) {
  const int k = lambda.num_parts();
  CyclicForm form;
  int next_top = lambda.n();
  for (int i = 1; i <= k; ++i) {
    std::vector<int> cycle{i};
    for (int off = 1; off < lambda.part(i); ++off) {
      cycle.push_back(next_top--);
    }
    form.cycles.push_back(std::move(cycle));
  }
  return omit_parentheses(form);
}

int length_formula(const Composition& lambda) {
  const int n = lambda.n();
  const int k = lambda.num_parts();
  int value = (n - 1) * (n - 2) / 2 + k - 1;
  for (int r = 1; r <= k; ++r) {
    value -= (r - 1) * lambda.part(r);
  }
  return value;
}

Composition st(const Composition& lambda) {
  std::vector<int> parts = lambda.parts();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (*it > 1) {
      const auto pos = parts.end() - 1 - (it - parts.rbegin());
      *pos -= 1;
      parts.insert(pos + 1, 1);
      return Composition(std::move(parts));
    }
  }
  throw std::invalid_argument("st is undefined when all parts equal 1");
}

int trailing_ones(const Composition& lambda) {
  int m = 0;
  const auto& parts = lambda.parts();
  for (auto it = parts.rbegin(); it != parts.rend() && *it == 1; ++it) ++m;
  return m;
}

Composition normalize(const Composition& lambda) {
  Composition cur = lambda;
  while (cur.part(cur.num_parts()) > 1) {
    cur = st(cur);
  }
  return cur;
}

int copy_index(const Permutation& p, const Composition& lambda) {
  if (lambda.part(lambda.num_parts()) != 1) {
    throw std::invalid_argument("copy_index requires a final part of size 1");
  }
  if (!is_member(p, lambda)) {
    throw std::invalid_argument("copy_index requires a member of the poset");
  }
  const int n = lambda.n();
  const int tail_len = trailing_ones(lambda) + 1;
  int count = 0;
  for (int a = n - tail_len + 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (p.at(a) > p.at(b)) ++count;
    }
  }
  return count;
}

CopyDecomposition decompose(const Composition& lambda, int max_n) {
  const int k = lambda.num_parts();
  if (lambda.part(k) != 1) {
    throw std::invalid_argument("decompose requires a final part of size 1");
  }
  int j = 0;
  for (int r = k; r >= 1; --r) {
    if (lambda.part(r) > 1) {
      j = r;
      break;
    }
  }
  if (j == 0) {
    throw std::invalid_argument("decompose requires some part greater than 1");
  }
  int t = 0;
  for (int r = 1; r <= j; ++r) t += lambda.part(r);

  CopyDecomposition dec{st(lambda), {}, t};
  dec.copies.assign(static_cast<size_t>(k - j + 1), {});
  for (const Permutation& p : enumerate_poset(lambda, max_n)) {
    const int i = copy_index(p, lambda);
    if (i < 0 || i > k - j) {
      throw std::runtime_error("tail inversion count outside the copy range");
    }
    dec.copies[static_cast<size_t>(i)].push_back(p);
  }
  return dec;
}

std::vector<int> q_factor_sequence(const Composition& lambda) {
  std::vector<int> factors;
  Composition cur = lambda;
  while (true) {
    const int k = cur.num_parts();
    int j = 0;
    for (int r = k; r >= 1; --r) {
      if (cur.part(r) > 1) {
        j = r;
        break;
      }
    }
    if (j == 0) break;
    if (j != k) {
      factors.push_back(k - j + 1);  // the poset splits into k-j+1 copies
    }
    cur = st(cur);  // when j == k the poset itself is unchanged
  }
  return factors;
}

QPolynomial gen_function(const Composition& lambda) {
  QPolynomial g = QPolynomial::one();
  for (int m : q_factor_sequence(lambda)) {
    g = g * QPolynomial::q_analog(m);
  }
  return g;
}

QPolynomial gen_function_bruteforce(const Composition& lambda, int max_n) {
  const auto elements = enumerate_poset(lambda, max_n);
  int top = 0;
  for (const Permutation& p : elements) top = std::max(top, inversions(p));
  std::vector<std::int64_t> coeffs(static_cast<size_t>(top) + 1, 0);
  for (const Permutation& p : elements) {
    ++coeffs[static_cast<size_t>(inversions(p))];
  }
  return QPolynomial(std::move(coeffs));
}

TopologyClass classify_topology(const Composition& lambda) {
  const Composition norm = normalize(lambda);
  const int k = norm.num_parts();
  int big_parts = 0;
  int big_pos = 0;
  int big_val = 0;
  for (int r = 1; r <= k; ++r) {
    if (norm.part(r) > 1) {
      ++big_parts;
      big_pos = r;
      big_val = norm.part(r);
    }
  }
  if (big_parts == 0) {
    return {TopologyClass::Kind::point, 0};
  }
  if (big_parts == 1 && big_pos == k - 1) {
    // Shape (1,...,1,b,1): a copy of the Bruhat order on S_b.
    return {TopologyClass::Kind::sphere, big_val};
  }
  return {TopologyClass::Kind::ball, 0};
}

std::string to_string(const TopologyClass& t) {
  switch (t.kind) {
    case TopologyClass::Kind::point:
      return "Point";
    case TopologyClass::Kind::ball:
      return "Ball";
    case TopologyClass::Kind::sphere:
      return "Sphere(" + std::to_string(t.sphere_order) + ")";
  }
  return "?";
}

}  // namespace omega
