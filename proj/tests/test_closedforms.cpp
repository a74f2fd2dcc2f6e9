#include "doctest.h"

#include "kostant/closedforms.hpp"
#include "kostant/partition.hpp"

using namespace kostant;

TEST_CASE("a2 formula examples") {
  CHECK(a2_qformula(0, 0) == QPolynomial::one());
  CHECK(a2_qformula(2, 1) == QPolynomial::power(2) + QPolynomial::power(3));
  CHECK(a2_qformula(1, 2) == QPolynomial::power(2) + QPolynomial::power(3));
  CHECK(a2_qformula(3, 0) == QPolynomial::power(3));
  CHECK_THROWS_AS(a2_qformula(-1, 0), std::invalid_argument);
}

TEST_CASE("a2 formula matches the A2 partition function") {
  RootSystem a2(Family::A, 2);
  PartitionEvaluator pe(a2);
  for (long n = 0; n <= 12; ++n)
    for (long m = 0; m <= 12; ++m) CHECK(a2_qformula(n, m) == pe.count_q(IntVec{n, m}));
}

TEST_CASE("a3 formula matches the A3 partition function") {
  RootSystem a3(Family::A, 3);
  PartitionEvaluator pe(a3);
  for (long m = 0; m <= 8; ++m)
    for (long n = 0; n <= 8; ++n)
      for (long k = 0; k <= 8; ++k) CHECK(a3_qformula(m, n, k) == pe.count_q(IntVec{m, n, k}));
  CHECK_THROWS_AS(a3_qformula(0, -2, 0), std::invalid_argument);
}

TEST_CASE("chain formula matches interval roots in B7") {
  RootSystem b7(Family::B, 7);
  PartitionEvaluator pe(b7);
  for (int i = 1; i <= 7; ++i)
    for (int j = i; j <= 7; ++j) {
      IntVec xi(7, 0);
      for (int t = i; t <= j; ++t) xi[t - 1] = 1;
      CHECK(chain_qformula(i, j) == pe.count_q(xi));
    }
  CHECK(chain_qformula(2, 2) == QPolynomial::power(1));
  CHECK(chain_qformula(1, 3) == QPolynomial::one_plus_q_pow(2).shifted(1));
  CHECK_THROWS_AS(chain_qformula(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(chain_qformula(0, 2), std::invalid_argument);
}

TEST_CASE("headed chain formula matches the B7 partition function") {
  RootSystem b7(Family::B, 7);
  PartitionEvaluator pe(b7);
  for (long x = 1; x <= 6; ++x)
    for (long y = 1; y <= 6; ++y)
      for (int ell = 3; ell <= 7; ++ell) {
        IntVec xi(7, 0);
        xi[0] = x;
        xi[1] = y;
        for (int t = 3; t <= ell; ++t) xi[t - 1] = 1;
        CHECK(headed_chain_qformula(x, y, ell) == pe.count_q(xi));
      }
  CHECK_THROWS_AS(headed_chain_qformula(0, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(headed_chain_qformula(1, 1, 2), std::invalid_argument);
}

TEST_CASE("alternating binomial identity") {
  for (int r = 0; r <= 30; ++r) CHECK(alt_binomial_identity_check(r));
  CHECK_THROWS_AS(alt_binomial_identity_check(-1), std::invalid_argument);
}
