#pragma once

#include <vector>

#include "omega/permutation.hpp"
#include "omega/qpolynomial.hpp"

namespace omega {

// Default cap on n for full enumerations; everything here is exponential.
inline constexpr int kDefaultEnumMaxN = 7;

// The poset C_lambda partitioned into shifted copies of C_{ST(lambda)}.
// copies[i] holds the elements whose length-(m+1) right tail has exactly
// i inversions; each is order-isomorphic to copies[0] with ranks +i.
struct CopyDecomposition {
  Composition base;                              // ST(lambda)
  std::vector<std::vector<Permutation>> copies;  // indexed 0..k-j
  int shift_position = 0;                        // t = lambda_1+...+lambda_j
};

// Homotopy type of the order complex, read off the normalized shape.
struct TopologyClass {
  enum class Kind { point, ball, sphere };
  Kind kind = Kind::point;
  int sphere_order = 0;  // b: the poset is a copy of the Bruhat order on S_b

  bool operator==(const TopologyClass&) const = default;
};

// True iff chopping p into consecutive blocks of sizes lambda_1,...,
// lambda_k gives a standard cyclic form: block leaders strictly increase
// and each leader is minimal in its block.  Throws if |lambda| != n.
bool is_member(const Permutation& p, const Composition& lambda);

// All members of C_lambda in lexicographic one-line order, built
// constructively (leader = smallest unused value, then ordered selections
// of the remaining entries).  Throws when n exceeds max_n.
std::vector<Permutation> enumerate_poset(const Composition& lambda,
                                         int max_n = kDefaultEnumMaxN);

// The unique maximum of C_lambda: cycle i is led by i and receives the
// next lambda_i - 1 largest unused values in decreasing order.
Permutation max_element_of(const Composition& lambda);

// C(n-1,2) + k - 1 - sum_r (r-1)*lambda_r; equals the inversion number
// of max_element_of(lambda).
int length_formula(const Composition& lambda);

// Splits the rightmost part > 1 into (part-1, 1).  Throws if all parts
// are 1.
Composition st(const Composition& lambda);

// m(lambda): number of trailing parts equal to 1.
int trailing_ones(const Composition& lambda);

// Repeatedly applies st while the last part exceeds 1; the poset is
// unchanged by those steps.
Composition normalize(const Composition& lambda);

// Inversion count of the length-(m(lambda)+1) right tail of p; picks the
// copy of C_{ST(lambda)} that p falls in.  Requires is_member(p, lambda)
// and a final part of size 1.
int copy_index(const Permutation& p, const Composition& lambda);

// Partition of C_lambda into the k-j+1 shifted copies of C_{ST(lambda)}.
// Requires a final part of 1 and some part > 1.
CopyDecomposition decompose(const Composition& lambda, int max_n = kDefaultEnumMaxN);

// The sequence (i_1 < i_2 < ... < i_r) with G_{C_lambda} = prod [i]_q.
std::vector<int> q_factor_sequence(const Composition& lambda);

// Rank generating function as the product of q-analogs over
// q_factor_sequence.
QPolynomial gen_function(const Composition& lambda);

// Independent route: sum of q^{inversions(p)} over the enumeration.
QPolynomial gen_function_bruteforce(const Composition& lambda,
                                    int max_n = kDefaultEnumMaxN);

// Point for (1,...,1); Sphere(b) when the normalized shape is
// (1,...,1,b,1); Ball otherwise.
TopologyClass classify_topology(const Composition& lambda);

std::string to_string(const TopologyClass& t);  // "Sphere(5)", "Ball", "Point"

}  // namespace omega
