#include "omega/qpolynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace omega {

QPolynomial::QPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("polynomial needs at least one coefficient");
  }
  if (coeffs_.size() > 1 && coeffs_.back() == 0) {
    throw std::invalid_argument("leading coefficient must be non-zero");
  }
  for (std::int64_t c : coeffs_) {
    if (c < 0) {
      throw std::invalid_argument("generating functions have non-negative coefficients");
    }
  }
}

QPolynomial QPolynomial::q_analog(int m) {
  if (m < 1) {
    throw std::invalid_argument("q-analog requires m >= 1");
  }
  return QPolynomial(std::vector<std::int64_t>(static_cast<size_t>(m), 1));
}

std::int64_t QPolynomial::coefficient(int d) const {
  if (d < 0 || d > degree()) return 0;
  return coeffs_[static_cast<size_t>(d)];
}

std::int64_t QPolynomial::value_at_one() const {
  std::int64_t sum = 0;
  for (std::int64_t c : coeffs_) sum += c;
  return sum;
}

bool QPolynomial::is_palindromic() const {
  const size_t m = coeffs_.size();
  for (size_t i = 0; i < m / 2; ++i) {
    if (coeffs_[i] != coeffs_[m - 1 - i]) return false;
  }
  return true;
}

bool QPolynomial::is_unimodal() const {
  size_t i = 1;
  while (i < coeffs_.size() && coeffs_[i - 1] <= coeffs_[i]) ++i;
  while (i < coeffs_.size() && coeffs_[i - 1] >= coeffs_[i]) ++i;
  return i == coeffs_.size();
}

QPolynomial QPolynomial::operator*(const QPolynomial& other) const {
  std::vector<std::int64_t> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    for (size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return QPolynomial(std::move(out));
}

std::string QPolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (size_t d = 0; d < coeffs_.size(); ++d) {
    if (coeffs_[d] == 0 && coeffs_.size() > 1) continue;
    if (!first) out << '+';
    first = false;
    if (d == 0 || coeffs_[d] != 1) out << coeffs_[d];
    if (d >= 1) {
      if (coeffs_[d] != 1) out << '*';
      out << 'q';
      if (d >= 2) out << '^' << d;
    }
  }
  return out.str();
}

}  // namespace omega
