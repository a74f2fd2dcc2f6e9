#include "doctest.h"

#include "kostant/partition.hpp"

using namespace kostant;

namespace {

// Brute-force oracle: count multisets of positive roots summing to xi by
// direct enumeration, tracking the number of parts. No memoization, no
// pruning beyond nonnegativity.
QPolynomial brute_count_q(const RootSystem& rs, const IntVec& xi, size_t idx = 0, int parts = 0) {
  bool zero = true;
  for (long c : xi)
    if (c) zero = false;
  if (zero) return QPolynomial::power(parts);
  if (idx == rs.positive_roots().size()) return QPolynomial::zero();
  const IntVec& root = rs.positive_roots()[idx];
  QPolynomial total = brute_count_q(rs, xi, idx + 1, parts);
  IntVec rest = xi;
  for (int used = 1;; ++used) {
    bool ok = true;
    for (size_t j = 0; j < rest.size(); ++j) {
      rest[j] -= root[j];
      if (rest[j] < 0) ok = false;
    }
    if (!ok) break;
    total += brute_count_q(rs, rest, idx + 1, parts + used);
  }
  return total;
}

RatVec rat(const IntVec& v) { return RatVec(v.begin(), v.end()); }

}  // namespace

TEST_CASE("base cases") {
  RootSystem a2(Family::A, 2);
  PartitionEvaluator pe(a2);
  CHECK(pe.count_q(IntVec{0, 0}) == QPolynomial::one());
  CHECK(pe.count(rat({0, 0})) == 1);
  CHECK(pe.count_q(rat({-1, 0})).is_zero());
  CHECK(pe.count(rat({-1, 0})) == 0);
  // non-integer coordinates contribute nothing
  CHECK(pe.count_q(RatVec{Rational(1, 2), 0}).is_zero());
}

TEST_CASE("simple roots have q-count q") {
  for (auto fam : {Family::A, Family::B, Family::G2}) {
    int rank = fam == Family::G2 ? 2 : 3;
    RootSystem rs(fam, rank);
    PartitionEvaluator pe(rs);
    for (int i = 0; i < rank; ++i) {
      IntVec alpha(rank, 0);
      alpha[i] = 1;
      CHECK(pe.count_q(alpha) == QPolynomial::power(1));
    }
  }
}

TEST_CASE("known small values") {
  {
    RootSystem a2(Family::A, 2);
    PartitionEvaluator pe(a2);
    // 2a1+a2 = (a1)+(a1)+(a2) or (a1)+(a1+a2)
    QPolynomial got = pe.count_q(IntVec{2, 1});
    CHECK(got == QPolynomial::power(2) + QPolynomial::power(3));
    CHECK(pe.count(rat({2, 1})) == 2);
  }
  {
    RootSystem g2(Family::G2, 2);
    PartitionEvaluator pe(g2);
    QPolynomial got = pe.count_q(IntVec{1, 2});
    CHECK(got == QPolynomial::power(2) + QPolynomial::power(3));
  }
  {
    RootSystem a3(Family::A, 3);
    PartitionEvaluator pe(a3);
    CHECK(pe.count(rat({1, 1, 1})) == 4);
  }
  {
    RootSystem b3(Family::B, 3);
    PartitionEvaluator pe(b3);
    CHECK(pe.count(rat({1, 1, 1})) == 4);
  }
}

TEST_CASE("q-count matches brute enumeration on small boxes") {
  for (auto fam : {Family::A, Family::B, Family::G2}) {
    for (int rank = fam == Family::G2 ? 2 : (fam == Family::B ? 2 : 1); rank <= (fam == Family::G2 ? 2 : 3);
         ++rank) {
      RootSystem rs(fam, rank);
      PartitionEvaluator pe(rs);
      IntVec xi(rank, 0);
      long bound = 4;
      while (true) {
        CHECK(pe.count_q(xi) == brute_count_q(rs, xi));
        int i = 0;
        while (i < rank && xi[i] == bound) xi[i++] = 0;
        if (i == rank) break;
        ++xi[i];
      }
    }
  }
}

TEST_CASE("degree equals coordinate sum with unit top coefficient") {
  // the unique longest partition uses only simple roots
  RootSystem b3(Family::B, 3);
  PartitionEvaluator pe(b3);
  for (IntVec xi : {IntVec{3, 1, 0}, IntVec{2, 2, 2}, IntVec{0, 4, 1}}) {
    QPolynomial p = pe.count_q(xi);
    long sum = 0;
    for (long c : xi) sum += c;
    CHECK(p.degree() == sum);
    CHECK(p.coeff(sum) == 1);
  }
}

TEST_CASE("memo cap triggers the cost guard") {
  RootSystem b4(Family::B, 4);
  PartitionEvaluator pe(b4, 256);
  CHECK_THROWS_AS(pe.count_q(IntVec{6, 8, 8, 6}), CostGuardError);
  // an uncapped evaluator accepts the same input
  PartitionEvaluator ok(b4);
  CHECK(ok.count(rat({6, 8, 8, 6})) > 0);
  CHECK(ok.memo_bytes() > 0);
}

TEST_CASE("memoized and fresh evaluations agree") {
  RootSystem a3(Family::A, 3);
  PartitionEvaluator pe(a3);
  QPolynomial first = pe.count_q(IntVec{3, 4, 2});
  QPolynomial again = pe.count_q(IntVec{3, 4, 2});
  PartitionEvaluator fresh(a3);
  CHECK(first == again);
  CHECK(first == fresh.count_q(IntVec{3, 4, 2}));
  CHECK(first.eval_at_one() == fresh.count(rat({3, 4, 2})));
}
