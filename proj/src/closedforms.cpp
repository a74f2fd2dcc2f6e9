#include "kostant/closedforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace kostant {

QPolynomial a2_qformula(long n, long m) {
  if (n < 0 || m < 0) throw std::invalid_argument("negative input");
  QPolynomial p;
  for (long j = std::max(n, m); j <= n + m; ++j)
    p += QPolynomial::power(static_cast<std::size_t>(j));
  return p;
}

QPolynomial a3_qformula(long m, long n, long k) {
  if (m < 0 || n < 0 || k < 0) throw std::invalid_argument("negative input");
  QPolynomial p;
  long fmax = std::min({m, n, k});
  for (long f = 0; f <= fmax; ++f) {
    long dmax = std::min(m - f, n - f);
    for (long d = 0; d <= dmax; ++d) {
      long emax = std::min(n - f - d, k - f);
      for (long e = 0; e <= emax; ++e)
        p += QPolynomial::power(static_cast<std::size_t>(m + n + k - d - e - 2 * f));
    }
  }
  return p;
}

QPolynomial chain_qformula(int i, int j) {
  if (i < 1 || i > j) throw std::invalid_argument("need 1 <= i <= j");
  return QPolynomial::one_plus_q_pow(static_cast<std::size_t>(j - i)).shifted(1);
}

QPolynomial headed_chain_qformula(long x, long y, int ell) {
  if (x < 1 || y < 1) throw std::invalid_argument("need x, y >= 1");
  if (ell < 3) throw std::invalid_argument("need ell >= 3");
  QPolynomial bracket = a2_qformula(x - 1, y - 1);
  bracket += a2_qformula(x, y - 1);
  bracket += a2_qformula(x, y);
  return (QPolynomial::one_plus_q_pow(static_cast<std::size_t>(ell - 3)) * bracket).shifted(1);
}

bool alt_binomial_identity_check(int r) {
  if (r < 0) throw std::invalid_argument("negative input");
  QPolynomial lhs;
  for (int m = 0; m <= r / 2; ++m) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(r - m),
                 static_cast<unsigned long>(m));
    if (m % 2 == 1) binom = -binom;
    QPolynomial term = QPolynomial::one_plus_q_pow(static_cast<std::size_t>(r - 2 * m)) *
                       QPolynomial::power(static_cast<std::size_t>(1 + m), binom);
    lhs += term;
  }
  QPolynomial rhs;
  for (int i = 1; i <= r + 1; ++i) rhs += QPolynomial::power(static_cast<std::size_t>(i));
  return lhs == rhs;
}

}  // namespace kostant
