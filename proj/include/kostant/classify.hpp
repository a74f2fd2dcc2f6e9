#pragma once

#include "kostant/multiplicity.hpp"
#include "kostant/qpoly.hpp"
#include "kostant/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kostant {

/// One enumerated multiplicity-one pair: lambda = ell*w1 (A, B), ell*w2 or
/// w1 (G2), mu with coefficients m_1..m_r solving the family's Diophantine
/// condition. Derived parameters are -1 when not applicable.
struct MultOneCase {
  Family family;
  int rank;
  long ell;
  IntVec mu;       // m_1..m_r
  bool g2_omega1 = false;  // the extra G2 pair (w1, 0)
  long p = -1;     // type A: (ell - sum i*m_i) / (r+1)
  long j = -1;     // type B: m_2 / 2
  long k = -1;     // type B: m_2/2 (k-case) or m_3/2 (jk-case)
  long n = -1;     // G2: m_1 = 3n+1

  Weight lambda_weight() const;
  Weight mu_weight() const;
};

/// All mu with m(lambda, mu) = 1 for the family's lambda at the given ell,
/// in lexicographic mu order.
std::vector<MultOneCase> mult_one_mus(Family family, int rank, long ell);

/// Alternation set predicted by the closed-form results, as reduced words
/// (empty word = identity); nullopt when no stated result covers the case.
std::optional<std::vector<std::vector<int>>> predicted_alternation_set(const MultOneCase& c);

/// q-multiplicity predicted by the closed-form results; nullopt when not
/// covered.
std::optional<QPolynomial> predicted_qmultiplicity(const MultOneCase& c);

/// F_1 = F_2 = 1.
unsigned long fibonacci(int n);

enum class FibCase { KCase, JKCase };

/// F_{r+1} for the k-case (r >= 3), 2F_r for the jk-case (r > 3).
unsigned long fibonacci_cardinality(int rank, FibCase kind);

struct ScanEntry {
  int rank;
  long ell;
  IntVec mu;
  QPolynomial mq;
  mpz_class m;
  bool pure_power;
};

struct ScanReport {
  Family family;
  std::vector<ScanEntry> entries;
  std::vector<std::size_t> violations;  // indices into entries
};

/// Computes m_q for every multiplicity-one pair in the range and flags any
/// that is not a pure power of q with value 1 at q=1.
ScanReport scan_conjecture(Family family, int rank_lo, int rank_hi, long ell_lo, long ell_hi,
                           int threads = 0,
                           unsigned long long budget = 20000000000ull);

std::string scan_report_json(const ScanReport& report);
std::string scan_report_markdown(const ScanReport& report);

/// Brute-force check of the enumerated list against {dominant mu :
/// m(lambda, mu) = 1}: soundness for every family, completeness where the
/// list is exhaustive (A, and G2 up to mu = lambda). Guarded to rank <= 3
/// and ell <= 6.
bool verify_bz_small(const RootSystem& rs, long ell);

}  // namespace kostant
