#pragma once

#include <compare>
#include <string>
#include <vector>

namespace omega {

// Cap for the exhaustive algorithms (enumeration, poset construction);
// everything downstream is exponential in n.  Plain value construction
// and arithmetic are not bounded by this.
inline constexpr int kDefaultMaxN = 12;

// A pair of 1-based positions (i,j) with i < j, ordered lexicographically.
// Used both as a position swap acting on one-line words and as the edge
// label alphabet of Hasse diagrams.
struct Transposition {
  int i = 0;
  int j = 0;

  Transposition(int i_, int j_);
  auto operator<=>(const Transposition&) const = default;
};

// A permutation of {1,...,n} in one-line notation.  Values and positions
// are 1-based throughout the public API; the 0-based storage never leaks
// into rendered or serialized output.  Immutable after construction.
class Permutation {
 public:
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }

  // Value at 1-based position pos.
  int at(int pos) const;

  const std::vector<int>& word() const { return word_; }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

// Ordered list of disjoint cycles.  Only *standard* forms (each cycle led
// by its minimum, leaders strictly increasing, fixed points kept) are
// accepted by omit_parentheses.
struct CyclicForm {
  std::vector<std::vector<int>> cycles;

  bool operator==(const CyclicForm&) const = default;
};

// Ordered list of positive parts summing to n.
struct Composition {
  explicit Composition(std::vector<int> parts);

  int n() const { return n_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  int part(int r) const;  // 1-based
  const std::vector<int>& parts() const { return parts_; }

  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

int inversions(const Permutation& p);

// Disjoint-cycle representation with each cycle starting at its minimum
// and cycle minima increasing left to right; fixed points retained.
CyclicForm standard_cyclic_form(const Permutation& p);

// True iff c satisfies every standard-form invariant (disjoint support
// covering {1,...,n}, minimal leaders, strictly increasing leaders).
bool is_standard_form(const CyclicForm& c);

// Erase the parentheses of a standard cyclic form and read the result as
// one-line notation.  Throws std::invalid_argument on non-standard input;
// the map is only injective per composition type on standard forms.
Permutation omit_parentheses(const CyclicForm& c);

// Composes the cycles of c as functions; works on any disjoint cycle
// list, standard or not.
Permutation compose_cycles(const CyclicForm& c);

// Cycle lengths of the standard cyclic form, in order.
Composition composition_type(const Permutation& p);

// p with the entries at positions t.i and t.j exchanged, i.e. p·(i,j).
Permutation apply_transposition_right(const Permutation& p, const Transposition& t);

Permutation inverse(const Permutation& p);

std::string to_string(const Permutation& p);    // "[1,6,5,2,3,4]"
std::string to_string(const CyclicForm& c);     // "(1,2)(3)(4,5)"
std::string to_string(const Composition& c);    // "(4,1,1)"
std::string to_string(const Transposition& t);  // "(2,3)"

// Parses "4,1,1"; throws std::invalid_argument on malformed input.
Composition parse_composition(const std::string& text);

// All compositions of n in lexicographic part order.
std::vector<Composition> compositions_of(int n);

}  // namespace omega
