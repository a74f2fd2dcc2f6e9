#include "kostant/rootsys.hpp"

#include <algorithm>

namespace kostant {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::G2: return "G2";
  }
  return "?";
}

Weight Weight::fw(IntVec c) {
  Weight w;
  w.basis = Basis::FundamentalWeights;
  w.coords.reserve(c.size());
  for (long v : c) w.coords.emplace_back(v);
  return w;
}

bool Weight::is_nonneg_integral() const {
  for (const auto& c : coords) {
    if (c < 0) return false;
    if (c.get_den() != 1) return false;
  }
  return true;
}

namespace {

// Exact inverse via Gauss-Jordan elimination.
std::vector<RatVec> invert(std::vector<RatVec> m) {
  const std::size_t n = m.size();
  std::vector<RatVec> inv(n, RatVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::runtime_error("singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    Rational p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rational f = m[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[row][j] -= f * m[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

RootSystem::RootSystem(Family family, int rank) : family_(family), rank_(rank) {
  switch (family) {
    case Family::A:
      if (rank < 1) throw std::invalid_argument("type A requires rank >= 1");
      break;
    case Family::B:
      if (rank < 2) throw std::invalid_argument("type B requires rank >= 2");
      break;
    case Family::G2:
      if (rank != 2) throw std::invalid_argument("G2 has rank 2");
      break;
  }

  const int r = rank_;
  cartan_.assign(r, IntVec(r, 0));
  gram_.assign(r, RatVec(r, 0));

  if (family == Family::A || family == Family::B) {
    // interval roots alpha_i + ... + alpha_j
    for (int i = 0; i < r; ++i)
      for (int j = i; j < r; ++j) {
        IntVec root(r, 0);
        for (int k = i; k <= j; ++k) root[k] = 1;
        positive_roots_.push_back(std::move(root));
      }
    for (int i = 0; i < r; ++i) {
      cartan_[i][i] = 2;
      if (i + 1 < r) cartan_[i][i + 1] = cartan_[i + 1][i] = -1;
      gram_[i][i] = 2;
      if (i + 1 < r) gram_[i][i + 1] = gram_[i + 1][i] = -1;
    }
  }
  if (family == Family::B) {
    // eps_i + eps_j (i < j): ones on [i, j-1], twos on [j, r-1]
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        IntVec root(r, 0);
        for (int k = i; k < j; ++k) root[k] = 1;
        for (int k = j; k < r; ++k) root[k] = 2;
        positive_roots_.push_back(std::move(root));
      }
    // alpha_r is short: (alpha_r, alpha_r) = 1
    cartan_[r - 2][r - 1] = -2;
    gram_[r - 1][r - 1] = 1;
  }
  if (family == Family::G2) {
    // alpha_1 short, alpha_2 long
    positive_roots_ = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
    cartan_ = {{2, -1}, {-3, 2}};
    gram_ = {{Rational(2), Rational(-3)}, {Rational(-3), Rational(6)}};
  }

  std::sort(positive_roots_.begin(), positive_roots_.end());

  // fw_to_root = inverse transpose of the Cartan matrix
  std::vector<RatVec> ct(r, RatVec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) ct[i][j] = Rational(cartan_[j][i]);
  fw_to_root_ = invert(std::move(ct));

  rho_root_.assign(r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) rho_root_[i] += fw_to_root_[i][j];
}

int RootSystem::epsilon_dim() const {
  switch (family_) {
    case Family::A: return rank_ + 1;
    case Family::B: return rank_;
    case Family::G2: return 2;
  }
  return 0;
}

Weight RootSystem::to_root_coords(const Weight& w) const {
  if (w.basis == Basis::SimpleRoots) return w;
  if (static_cast<int>(w.coords.size()) != rank_)
    throw std::invalid_argument("weight dimension mismatch");
  Weight out;
  out.basis = Basis::SimpleRoots;
  out.coords.assign(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out.coords[i] += fw_to_root_[i][j] * w.coords[j];
  return out;
}

Weight RootSystem::to_fw_coords(const Weight& w) const {
  if (w.basis == Basis::FundamentalWeights) return w;
  if (static_cast<int>(w.coords.size()) != rank_)
    throw std::invalid_argument("weight dimension mismatch");
  // FW coordinate i of v is <v, alpha_i-check> = sum_j cartan[j][i] * x_j
  Weight out;
  out.basis = Basis::FundamentalWeights;
  out.coords.assign(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out.coords[i] += Rational(cartan_[j][i]) * w.coords[j];
  return out;
}

Rational RootSystem::inner(const RatVec& a, const RatVec& b) const {
  Rational s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += a[i] * gram_[i][j] * b[j];
  return s;
}

}  // namespace kostant
