#include "kostant/partition.hpp"

#include <algorithm>
#include <cstring>
#include <limits>

namespace kostant {

bool is_nonneg_integral(const RatVec& xi) {
  for (const auto& c : xi) {
    if (c < 0) return false;
    if (c.get_den() != 1) return false;
  }
  return true;
}

PartitionEvaluator::PartitionEvaluator(const RootSystem& rs, std::size_t memo_cap_bytes)
    : rs_(rs), memo_cap_(memo_cap_bytes) {
  const auto& roots = rs_.positive_roots();
  const int r = rs_.rank();
  touched_.assign(roots.size(), std::vector<bool>(r, false));
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i > 0) touched_[i] = touched_[i - 1];
    for (int j = 0; j < r; ++j)
      if (roots[i][j] != 0) touched_[i][j] = true;
  }
}

QPolynomial PartitionEvaluator::count_q(const RatVec& xi_root) {
  if (static_cast<int>(xi_root.size()) != rs_.rank())
    throw std::invalid_argument("vector dimension mismatch");
  if (!is_nonneg_integral(xi_root)) return QPolynomial{};
  IntVec xi(rs_.rank());
  for (int i = 0; i < rs_.rank(); ++i) xi[i] = xi_root[i].get_num().get_si();
  return count_q(xi);
}

QPolynomial PartitionEvaluator::count_q(const IntVec& xi) {
  IntVec work = xi;
  for (long v : work)
    if (v < 0) return QPolynomial{};
  return eval(static_cast<int>(rs_.positive_roots().size()) - 1, work);
}

mpz_class PartitionEvaluator::count(const RatVec& xi_root) {
  return count_q(xi_root).eval_at_one();
}

QPolynomial PartitionEvaluator::eval(int idx, IntVec& xi) {
  bool all_zero = true;
  for (long v : xi)
    if (v != 0) { all_zero = false; break; }
  if (all_zero) return QPolynomial::one();
  if (idx < 0) return QPolynomial{};
  // no remaining root can supply a coordinate outside its touched set
  for (std::size_t j = 0; j < xi.size(); ++j)
    if (xi[j] != 0 && !touched_[idx][j]) return QPolynomial{};

  std::string key;
  key.resize(sizeof(int) + xi.size() * sizeof(long));
  std::memcpy(key.data(), &idx, sizeof(int));
  std::memcpy(key.data() + sizeof(int), xi.data(), xi.size() * sizeof(long));
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  const IntVec& root = rs_.positive_roots()[idx];
  long kmax = std::numeric_limits<long>::max();
  for (std::size_t j = 0; j < xi.size(); ++j)
    if (root[j] != 0) kmax = std::min(kmax, xi[j] / root[j]);

  QPolynomial result;
  for (long k = 0; k <= kmax; ++k) {
    if (k > 0)
      for (std::size_t j = 0; j < xi.size(); ++j) xi[j] -= root[j];
    QPolynomial sub = eval(idx - 1, xi);
    if (!sub.is_zero()) result += sub.shifted(static_cast<std::size_t>(k));
  }
  for (std::size_t j = 0; j < xi.size(); ++j) xi[j] += kmax * root[j];

  memo_bytes_ += key.size() + result.memory_footprint();
  if (memo_bytes_ > memo_cap_)
    throw CostGuardError("partition memo exceeded " + std::to_string(memo_cap_) + " bytes");
  memo_.emplace(std::move(key), result);
  return result;
}

}  // namespace kostant
