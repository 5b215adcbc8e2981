#include "omega/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace omega {

Transposition::Transposition(int i_, int j_) : i(i_), j(j_) {
  if (i < 1 || i >= j) {
    throw std::invalid_argument("transposition requires 1 <= i < j");
  }
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  if (n < 1) {
    throw std::invalid_argument("permutation needs at least one entry");
  }
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)]) {
      throw std::invalid_argument("word is not a bijection of {1,...,n}");
    }
    seen[static_cast<size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

int Permutation::at(int pos) const {
  if (pos < 1 || pos > size()) {
    throw std::out_of_range("position out of range");
  }
  return word_[static_cast<size_t>(pos - 1)];
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw std::invalid_argument("composition needs at least one part");
  }
  for (int p : parts_) {
    if (p < 1) {
      throw std::invalid_argument("composition parts must be positive");
    }
    n_ += p;
  }
}

int Composition::part(int r) const {
  if (r < 1 || r > num_parts()) {
    throw std::out_of_range("part index out of range");
  }
  return parts_[static_cast<size_t>(r - 1)];
}

int inversions(const Permutation& p) {
  const auto& w = p.word();
  int count = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    for (size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j]) ++count;
    }
  }
  return count;
}

CyclicForm standard_cyclic_form(const Permutation& p) {
  const int n = p.size();
  std::vector<char> used(static_cast<size_t>(n) + 1, 0);
  CyclicForm form;
  for (int start = 1; start <= n; ++start) {
    if (used[static_cast<size_t>(start)]) continue;
    std::vector<int> cycle;
    int v = start;
    do {
      used[static_cast<size_t>(v)] = 1;
      cycle.push_back(v);
      v = p.at(v);
    } while (v != start);
    form.cycles.push_back(std::move(cycle));
  }
  return form;
}

bool is_standard_form(const CyclicForm& c) {
  if (c.cycles.empty()) return false;
  int n = 0;
  for (const auto& cyc : c.cycles) {
    if (cyc.empty()) return false;
    n += static_cast<int>(cyc.size());
  }
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  int prev_leader = 0;
  for (const auto& cyc : c.cycles) {
    const int leader = cyc.front();
    if (leader <= prev_leader) return false;
    prev_leader = leader;
    for (int v : cyc) {
      if (v < 1 || v > n || seen[static_cast<size_t>(v)]) return false;
      seen[static_cast<size_t>(v)] = 1;
      if (v < leader) return false;
    }
  }
  return true;
}

Permutation omit_parentheses(const CyclicForm& c) {
  if (!is_standard_form(c)) {
    throw std::invalid_argument("omit_parentheses requires a standard cyclic form");
  }
  std::vector<int> word;
  for (const auto& cyc : c.cycles) {
    word.insert(word.end(), cyc.begin(), cyc.end());
  }
  return Permutation(std::move(word));
}

Permutation compose_cycles(const CyclicForm& c) {
  int n = 0;
  for (const auto& cyc : c.cycles) n += static_cast<int>(cyc.size());
  std::vector<int> word(static_cast<size_t>(n), 0);
  for (const auto& cyc : c.cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      const int from = cyc[i];
      const int to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > n || word[static_cast<size_t>(from - 1)] != 0) {
        throw std::invalid_argument("cycles are not disjoint over {1,...,n}");
      }
      word[static_cast<size_t>(from - 1)] = to;
    }
  }
  return Permutation(std::move(word));
}

Composition composition_type(const Permutation& p) {
  std::vector<int> parts;
  for (const auto& cyc : standard_cyclic_form(p).cycles) {
    parts.push_back(static_cast<int>(cyc.size()));
  }
  return Composition(std::move(parts));
}

Permutation apply_transposition_right(const Permutation& p, const Transposition& t) {
  if (t.j > p.size()) {
    throw std::out_of_range("transposition position exceeds permutation size");
  }
  std::vector<int> w = p.word();
  std::swap(w[static_cast<size_t>(t.i - 1)], w[static_cast<size_t>(t.j - 1)]);
  return Permutation(std::move(w));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> w(static_cast<size_t>(p.size()));
  for (int pos = 1; pos <= p.size(); ++pos) {
    w[static_cast<size_t>(p.at(pos) - 1)] = pos;
  }
  return Permutation(std::move(w));
}

std::string to_string(const Permutation& p) {
  std::ostringstream out;
  out << '[';
  for (int pos = 1; pos <= p.size(); ++pos) {
    if (pos > 1) out << ',';
    out << p.at(pos);
  }
  out << ']';
  return out.str();
}

std::string to_string(const CyclicForm& c) {
  std::ostringstream out;
  for (const auto& cyc : c.cycles) {
    out << '(';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i > 0) out << ',';
      out << cyc[i];
    }
    out << ')';
  }
  return out.str();
}

std::string to_string(const Composition& c) {
  std::ostringstream out;
  out << '(';
  for (int r = 1; r <= c.num_parts(); ++r) {
    if (r > 1) out << ',';
    out << c.part(r);
  }
  out << ')';
  return out.str();
}

std::string to_string(const Transposition& t) {
  return "(" + std::to_string(t.i) + "," + std::to_string(t.j) + ")";
}

Composition parse_composition(const std::string& text) {
  std::vector<int> parts;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    size_t consumed = 0;
    int value = 0;
    try {
      value = std::stoi(token, &consumed);
    } catch (const std::exception&) {
      throw std::invalid_argument("composition part is not an integer: '" + token + "'");
    }
    while (consumed < token.size() && std::isspace(static_cast<unsigned char>(token[consumed]))) {
      ++consumed;
    }
    if (consumed != token.size()) {
      throw std::invalid_argument("trailing characters in composition part: '" + token + "'");
    }
    parts.push_back(value);
  }
  if (parts.empty()) {
    throw std::invalid_argument("empty composition");
  }
  return Composition(std::move(parts));
}

namespace {

void compositions_rec(int remaining, std::vector<int>& prefix,
                      std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int first = 1; first <= remaining; ++first) {
    prefix.push_back(first);
    compositions_rec(remaining - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions_of(int n) {
  if (n < 1) {
    throw std::invalid_argument("n must be positive");
  }
  std::vector<Composition> out;
  std::vector<int> prefix;
  compositions_rec(n, prefix, out);
  return out;
}

}  // namespace omega
