#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace omega {

// Dense integer polynomial in q.  Rank generating functions only, so all
// coefficients stay non-negative and the leading coefficient is non-zero
// (the constant 1 is stored as the single coefficient [1]).
class QPolynomial {
 public:
  QPolynomial() : coeffs_{1} {}
  explicit QPolynomial(std::vector<std::int64_t> coeffs);

  static QPolynomial one() { return QPolynomial(); }

  // The q-analog [m]_q = 1 + q + ... + q^{m-1}.
  static QPolynomial q_analog(int m);

  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coefficient(int d) const;

  std::int64_t value_at_one() const;

  bool is_palindromic() const;
  bool is_unimodal() const;

  QPolynomial operator*(const QPolynomial& other) const;

  bool operator==(const QPolynomial&) const = default;

  std::string to_string() const;  // "1+3q+6q^2+..."

 private:
  std::vector<std::int64_t> coeffs_;
};

}  // namespace omega
