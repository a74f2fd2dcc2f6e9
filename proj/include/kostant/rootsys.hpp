#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace kostant {

enum class Family { A, B, G2 };

std::string family_name(Family f);

using Rational = mpq_class;
using RatVec = std::vector<Rational>;
using IntVec = std::vector<long>;

enum class Basis { FundamentalWeights, SimpleRoots };

/// Exact rational weight vector tagged with its coordinate basis.
struct Weight {
  RatVec coords;
  Basis basis = Basis::FundamentalWeights;

  static Weight fw(IntVec c);
  bool is_nonneg_integral() const;
};

/// Exact root-system data for A_r (r>=1), B_r (r>=2) and G2.
///
/// Simple roots are the standard basis vectors of the root-coordinate
/// lattice; positive roots are stored in lexicographic order on their
/// root coordinates. Immutable after construction.
class RootSystem {
public:
  RootSystem(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int epsilon_dim() const;

  const std::vector<IntVec>& positive_roots() const { return positive_roots_; }

  /// cartan[i][j] = 2(alpha_i, alpha_j) / (alpha_j, alpha_j)
  const std::vector<IntVec>& cartan() const { return cartan_; }

  /// gram[i][j] = (alpha_i, alpha_j) in the standard epsilon-model scaling.
  const std::vector<RatVec>& gram() const { return gram_; }

  /// Column j holds the root coordinates of the j-th fundamental weight;
  /// equals the inverse transpose of the Cartan matrix.
  const std::vector<RatVec>& fw_to_root() const { return fw_to_root_; }

  /// rho = sum of fundamental weights = half-sum of positive roots, in
  /// root coordinates.
  const RatVec& rho_root() const { return rho_root_; }

  Weight to_root_coords(const Weight& w) const;
  Weight to_fw_coords(const Weight& w) const;

  /// Exact inner product of two root-coordinate vectors.
  Rational inner(const RatVec& a, const RatVec& b) const;

private:
  Family family_;
  int rank_;
  std::vector<IntVec> positive_roots_;
  std::vector<IntVec> cartan_;
  std::vector<RatVec> gram_;
  std::vector<RatVec> fw_to_root_;
  RatVec rho_root_;
};

}  // namespace kostant
