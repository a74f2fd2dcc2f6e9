#pragma once

#include "kostant/partition.hpp"
#include "kostant/qpoly.hpp"
#include "kostant/rootsys.hpp"
#include "kostant/weyl.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace kostant {

/// One surviving term of the Kostant sum: an element whose partition value
/// at the shifted weight difference is nonzero.
struct TermRecord {
  WeylElement element;
  std::vector<int> word;
  int sign;
  QPolynomial contribution;
};

/// The alternation set of a pair together with the q-multiplicity it
/// recombines to. Terms are sorted by (length, lex reduced word).
struct AlternationRecord {
  Weight lambda;
  Weight mu;
  std::vector<TermRecord> set;
  QPolynomial mq;
  mpz_class m;
};

/// Kostant-sum evaluator with an integer hot path per family and OpenMP
/// range-partitioned enumeration. Results are bit-identical to serial
/// evaluation because partial sums merge in chunk order. Partition memo
/// tables persist across queries (one per worker chunk), so repeated
/// queries on one evaluator share work; concurrent queries on a single
/// instance are not supported.
class KostantEvaluator {
public:
  explicit KostantEvaluator(const RootSystem& rs, int threads = 0,
                            std::size_t memo_cap_bytes = std::size_t(1) << 31);

  const RootSystem& root_system() const { return rs_; }
  void set_threads(int threads) { threads_ = threads; }

  QPolynomial multiplicity_q(const Weight& lambda, const Weight& mu) const;
  mpz_class multiplicity(const Weight& lambda, const Weight& mu) const;
  AlternationRecord alternation_record(const Weight& lambda, const Weight& mu) const;

  /// Independent reference path: streams WeylGroup::for_each and acts on
  /// exact rational weights. Kept for differential testing and benchmarks.
  QPolynomial multiplicity_q_serial(const Weight& lambda, const Weight& mu) const;

private:
  struct Survivor {
    WeylElement element;
    QPolynomial contribution;
  };
  void scan(const Weight& lambda, const Weight& mu, bool collect,
            QPolynomial& total, std::vector<Survivor>& survivors) const;
  PartitionEvaluator& chunk_evaluator(std::size_t idx) const;

  const RootSystem& rs_;
  WeylGroup wg_;
  int threads_;
  std::size_t memo_cap_;
  mutable std::vector<std::unique_ptr<PartitionEvaluator>> pe_pool_;
};

/// Classical Freudenthal recursion over the dominant weight diagram of
/// L(lambda). Verification oracle only; materializes the full diagram, so
/// keep lambda small.
mpz_class freudenthal_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu);

std::string alternation_record_json(const AlternationRecord& rec);

}  // namespace kostant
