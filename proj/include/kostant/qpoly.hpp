#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace kostant {

/// Dense polynomial in q with arbitrary-precision integer coefficients.
/// Canonical form: no trailing zero coefficients; the zero polynomial has
/// an empty coefficient list.
class QPolynomial {
public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<mpz_class> coeffs);

  static QPolynomial zero() { return QPolynomial{}; }
  static QPolynomial one() { return power(0); }
  /// q^k
  static QPolynomial power(std::size_t k, mpz_class coeff = 1);
  /// (1+q)^n expanded
  static QPolynomial one_plus_q_pow(std::size_t n);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpz_class& coeff(std::size_t k) const;

  /// True iff the polynomial is exactly q^k for some k (coefficient 1).
  bool is_pure_power() const;

  mpz_class eval_at_one() const;

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  /// Multiply by q^k.
  QPolynomial shifted(std::size_t k) const;

  bool operator==(const QPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

  /// "0", "1", "q", "q^3", or ascending sparse form "1 + 2q + q^2".
  std::string to_string() const;

  std::size_t memory_footprint() const;

private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

}  // namespace kostant
