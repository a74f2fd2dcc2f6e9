#include "doctest.h"

#include "kostant/multiplicity.hpp"

#include "json.hpp"

#include <array>
#include <random>
#include <set>

using namespace kostant;

namespace {

std::vector<std::string> words_of(const AlternationRecord& rec) {
  std::vector<std::string> out;
  for (const TermRecord& t : rec.set) out.push_back(WeylGroup::word_string(t.word));
  return out;
}

}  // namespace

TEST_CASE("small known q-multiplicities") {
  {
    RootSystem a2(Family::A, 2);
    KostantEvaluator ke(a2);
    CHECK(ke.multiplicity_q(Weight::fw({3, 0}), Weight::fw({0, 0})) == QPolynomial::power(3));
    CHECK(ke.multiplicity(Weight::fw({3, 0}), Weight::fw({0, 0})) == 1);
  }
  {
    RootSystem b4(Family::B, 4);
    KostantEvaluator ke(b4);
    CHECK(ke.multiplicity_q(Weight::fw({5, 0, 0, 0}), Weight::fw({0, 2, 0, 0})) ==
          QPolynomial::power(6));
  }
  {
    RootSystem g2(Family::G2, 2);
    KostantEvaluator ke(g2);
    CHECK(ke.multiplicity_q(Weight::fw({0, 1}), Weight::fw({1, 0})) == QPolynomial::power(2));
  }
}

TEST_CASE("lambda equals mu gives multiplicity one") {
  for (auto fam : {Family::A, Family::B, Family::G2}) {
    int rank = fam == Family::G2 ? 2 : 3;
    RootSystem rs(fam, rank);
    KostantEvaluator ke(rs);
    Weight lam = Weight::fw(IntVec(rank, 2));
    CHECK(ke.multiplicity(lam, lam) == 1);
    CHECK(ke.multiplicity_q(lam, lam) == QPolynomial::one());
  }
}

TEST_CASE("known alternation sets") {
  {
    RootSystem a2(Family::A, 2);
    KostantEvaluator ke(a2);
    auto rec = ke.alternation_record(Weight::fw({0, 0}), Weight::fw({0, 0}));
    CHECK(words_of(rec) == std::vector<std::string>{"1"});
  }
  {
    RootSystem b3(Family::B, 3);
    KostantEvaluator ke(b3);
    auto rec = ke.alternation_record(Weight::fw({1, 0, 0}), Weight::fw({0, 0, 0}));
    CHECK(words_of(rec) == std::vector<std::string>{"1", "s2", "s3"});
  }
  {
    RootSystem g2(Family::G2, 2);
    KostantEvaluator ke(g2);
    auto rec = ke.alternation_record(Weight::fw({0, 1}), Weight::fw({1, 0}));
    CHECK(words_of(rec) == std::vector<std::string>{"1", "s1"});
    // the two surviving terms with their signed contributions
    REQUIRE(rec.set.size() == 2);
    CHECK(rec.set[0].sign == 1);
    CHECK(rec.set[0].contribution == QPolynomial::power(1) + QPolynomial::power(2));
    CHECK(rec.set[1].sign == -1);
    CHECK(rec.set[1].contribution == QPolynomial::power(1));
    CHECK(rec.mq == QPolynomial::power(2));
    CHECK(rec.m == 1);
  }
}

TEST_CASE("record internals are consistent") {
  RootSystem b3(Family::B, 3);
  KostantEvaluator ke(b3);
  WeylGroup wg(b3);
  auto rec = ke.alternation_record(Weight::fw({3, 1, 0}), Weight::fw({1, 0, 2}));
  CHECK_FALSE(rec.set.empty());
  QPolynomial total;
  std::set<std::uint64_t> keys;
  for (const TermRecord& t : rec.set) {
    CHECK(keys.insert(t.element.key()).second);
    CHECK(t.sign == t.element.sign);
    CHECK(element_from_word(wg, t.word) == t.element);
    CHECK_FALSE(t.contribution.is_zero());
    if (t.sign > 0)
      total += t.contribution;
    else
      total -= t.contribution;
  }
  CHECK(total == rec.mq);
  CHECK(rec.m == rec.mq.eval_at_one());
}

TEST_CASE("identity survives exactly when lambda - mu is a nonnegative root sum") {
  RootSystem b2(Family::B, 2);
  KostantEvaluator ke(b2);
  auto in_set = [&](IntVec lam, IntVec mu) {
    auto rec = ke.alternation_record(Weight::fw(lam), Weight::fw(mu));
    for (const TermRecord& t : rec.set)
      if (t.word.empty()) return true;
    return false;
  };
  CHECK(in_set({2, 0}, {0, 0}));
  CHECK(in_set({1, 1}, {1, 1}));
  CHECK_FALSE(in_set({0, 1}, {2, 1}));
  // lambda - mu = w2, the spin weight, lies outside the root lattice
  CHECK_FALSE(in_set({0, 1}, {0, 0}));
}

TEST_CASE("parallel, single-thread, and rational reference paths agree") {
  struct Case {
    Family fam;
    int rank;
    IntVec lam, mu;
  };
  std::vector<Case> cases = {
      {Family::A, 3, {4, 0, 2}, {1, 1, 1}},
      {Family::A, 4, {6, 0, 0, 0}, {0, 1, 0, 1}},
      {Family::B, 3, {3, 0, 1}, {1, 1, 0}},
      {Family::B, 4, {5, 0, 0, 0}, {0, 2, 0, 0}},
      {Family::G2, 2, {2, 3}, {1, 1}},
  };
  for (const Case& c : cases) {
    RootSystem rs(c.fam, c.rank);
    KostantEvaluator par(rs, 3);
    KostantEvaluator ser(rs, 1);
    QPolynomial a = par.multiplicity_q(Weight::fw(c.lam), Weight::fw(c.mu));
    QPolynomial b = ser.multiplicity_q(Weight::fw(c.lam), Weight::fw(c.mu));
    QPolynomial r = ser.multiplicity_q_serial(Weight::fw(c.lam), Weight::fw(c.mu));
    CHECK(a == b);
    CHECK(a == r);
  }
}

TEST_CASE("Freudenthal examples") {
  {
    RootSystem a2(Family::A, 2);
    // adjoint representation: the zero weight has multiplicity 2
    CHECK(freudenthal_multiplicity(a2, Weight::fw({1, 1}), Weight::fw({0, 0})) == 2);
  }
  {
    RootSystem b2(Family::B, 2);
    CHECK(freudenthal_multiplicity(b2, Weight::fw({3, 0}), Weight::fw({0, 2})) == 1);
    CHECK(freudenthal_multiplicity(b2, Weight::fw({3, 0}), Weight::fw({3, 0})) == 1);
  }
  // non-dominant highest weights are rejected
  RootSystem a1(Family::A, 1);
  CHECK_THROWS_AS(freudenthal_multiplicity(a1, Weight::fw({-1}), Weight::fw({1})),
                  std::invalid_argument);
}

TEST_CASE("Kostant and Freudenthal agree on random small pairs") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long> coord(0, 3);
  for (int trial = 0; trial < 60; ++trial) {
    Family fam = std::array{Family::A, Family::B, Family::G2}[trial % 3];
    int rank = fam == Family::G2 ? 2 : 2 + static_cast<int>(rng() % 2);
    RootSystem rs(fam, rank);
    KostantEvaluator ke(rs);
    IntVec lam(rank), mu(rank);
    for (int i = 0; i < rank; ++i) lam[i] = coord(rng);
    for (int i = 0; i < rank; ++i) mu[i] = coord(rng);
    mpz_class kost = ke.multiplicity(Weight::fw(lam), Weight::fw(mu));
    mpz_class freud = freudenthal_multiplicity(rs, Weight::fw(lam), Weight::fw(mu));
    CHECK(kost == freud);
  }
}

TEST_CASE("json serialization is stable under a round trip") {
  RootSystem g2(Family::G2, 2);
  KostantEvaluator ke(g2);
  auto rec = ke.alternation_record(Weight::fw({0, 2}), Weight::fw({1, 0}));
  std::string text = alternation_record_json(rec);
  auto parsed = nlohmann::ordered_json::parse(text);
  CHECK(parsed.dump() == text);
  CHECK(parsed["lambda"].size() == 2);
  CHECK(parsed["set"].size() == rec.set.size());
  CHECK(parsed["m"].get<long>() == rec.m.get_si());
}

TEST_CASE("non-integral weight differences give zero") {
  RootSystem a2(Family::A, 2);
  KostantEvaluator ke(a2);
  // lambda - mu = w1, outside the root lattice
  CHECK(ke.multiplicity_q(Weight::fw({1, 0}), Weight::fw({0, 0})).is_zero());
  CHECK(ke.multiplicity(Weight::fw({1, 0}), Weight::fw({0, 0})) == 0);
  CHECK(ke.alternation_record(Weight::fw({1, 0}), Weight::fw({0, 0})).set.empty());
}
