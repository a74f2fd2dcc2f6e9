#include "kostant/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace kostant {

QPolynomial::QPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

QPolynomial QPolynomial::power(std::size_t k, mpz_class coeff) {
  if (coeff == 0) return QPolynomial{};
  std::vector<mpz_class> c(k + 1, mpz_class(0));
  c[k] = std::move(coeff);
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::one_plus_q_pow(std::size_t n) {
  std::vector<mpz_class> c(n + 1);
  mpz_class binom = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    c[k] = binom;
    binom = binom * static_cast<unsigned long>(n - k) / static_cast<unsigned long>(k + 1);
  }
  return QPolynomial(std::move(c));
}

const mpz_class& QPolynomial::coeff(std::size_t k) const {
  static const mpz_class zero_coeff(0);
  return k < coeffs_.size() ? coeffs_[k] : zero_coeff;
}

bool QPolynomial::is_pure_power() const {
  if (coeffs_.empty()) return false;
  if (coeffs_.back() != 1) return false;
  for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

mpz_class QPolynomial::eval_at_one() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return QPolynomial{};
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<mpz_class> c(coeffs_.size() + k);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + k] = coeffs_[i];
  return QPolynomial(std::move(c));
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  if (is_pure_power()) {
    std::size_t k = coeffs_.size() - 1;
    if (k == 0) return "1";
    if (k == 1) return "q";
    return "q^" + std::to_string(k);
  }
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (k == 0) {
      out << coeffs_[k].get_str();
    } else {
      if (coeffs_[k] != 1) out << coeffs_[k].get_str();
      out << (k == 1 ? "q" : "q^" + std::to_string(k));
    }
  }
  return out.str();
}

std::size_t QPolynomial::memory_footprint() const {
  std::size_t bytes = sizeof(*this) + coeffs_.capacity() * sizeof(mpz_class);
  for (const auto& c : coeffs_) bytes += mpz_size(c.get_mpz_t()) * sizeof(mp_limb_t);
  return bytes;
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace kostant
