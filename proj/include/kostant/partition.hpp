#pragma once

#include "kostant/qpoly.hpp"
#include "kostant/rootsys.hpp"

#include <cstddef>
#include <stdexcept>
#include <unordered_map>

namespace kostant {

/// Thrown when a computation would exceed a configured resource cap.
struct CostGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_nonneg_integral(const RatVec& xi);

/// Memoized evaluator for the vector partition function of a root system
/// and its q-analog. The q^j coefficient of count_q(xi) is the number of
/// multisets of exactly j positive roots summing to xi.
///
/// The memo table is eviction-free and grows until the configured byte
/// cap, at which point evaluation throws CostGuardError. Not thread-safe;
/// instantiate one evaluator per worker.
class PartitionEvaluator {
public:
  explicit PartitionEvaluator(const RootSystem& rs,
                              std::size_t memo_cap_bytes = std::size_t(1) << 31);

  const RootSystem& root_system() const { return rs_; }

  /// Zero polynomial whenever xi has a negative or non-integer coordinate.
  QPolynomial count_q(const RatVec& xi_root);
  QPolynomial count_q(const IntVec& xi);
  mpz_class count(const RatVec& xi_root);

  std::size_t memo_bytes() const { return memo_bytes_; }
  void set_memo_cap(std::size_t bytes) { memo_cap_ = bytes; }

private:
  QPolynomial eval(int idx, IntVec& xi);

  const RootSystem& rs_;
  std::size_t memo_cap_;
  std::size_t memo_bytes_ = 0;
  // touched_[i][j]: some root with index <= i has a nonzero j-th coordinate
  std::vector<std::vector<bool>> touched_;
  std::unordered_map<std::string, QPolynomial> memo_;
};

}  // namespace kostant
