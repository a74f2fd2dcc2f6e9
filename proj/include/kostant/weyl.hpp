#pragma once

#include "kostant/rootsys.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace kostant {

/// A Weyl group element in a family-specific compact representation:
/// a permutation of r+1 letters (A_r), a signed permutation of r letters
/// (B_r), or an index into the fixed 12-element table (G2).
struct WeylElement {
  std::vector<std::uint8_t> perm;  // A/B: perm[i] is the image index of eps_{i+1}
  std::uint32_t flips = 0;         // B only: bit i set means eps_{i+1} picks up a sign
  int g2 = 0;                      // G2 only: table index
  int sign = 1;                    // (-1)^length

  /// Canonical packed encoding, unique per group element.
  std::uint64_t key() const;
  bool operator==(const WeylElement& o) const { return key() == o.key(); }
};

/// Finite Weyl group of a RootSystem: streaming enumeration, action on
/// weights, and reduced-word extraction.
class WeylGroup {
public:
  explicit WeylGroup(const RootSystem& rs);

  const RootSystem& root_system() const { return rs_; }
  unsigned long long order() const;

  WeylElement identity() const;
  WeylElement simple_reflection(int i) const;  // 1-based index
  WeylElement multiply(const WeylElement& a, const WeylElement& b) const;  // a after b
  WeylElement inverse(const WeylElement& a) const;

  /// Action on a root-coordinate vector, exact.
  RatVec act_root(const WeylElement& e, const RatVec& v) const;

  /// Visits every element exactly once in a fixed deterministic order
  /// without materializing the group.
  void for_each(const std::function<void(const WeylElement&)>& cb) const;

  /// Lexicographically least reduced word, as 1-based simple-reflection
  /// indices; the identity yields the empty word.
  std::vector<int> reduced_word(const WeylElement& e) const;
  int length(const WeylElement& e) const { return static_cast<int>(reduced_word(e).size()); }

  /// "s2s3" notation; identity serializes as "1".
  static std::string word_string(const std::vector<int>& word);

  // --- G2 internals shared with the multiplicity kernel ---
  /// Integer matrix of element e acting on root coordinates (column-major
  /// 2x2: m[0] m[2] / m[1] m[3]).
  const std::array<long, 4>& g2_matrix(int index) const;

private:
  int g2_index_of(const std::array<long, 4>& m) const;

  const RootSystem& rs_;
  // G2 table, ordered by (length, lex reduced word).
  std::vector<std::array<long, 4>> g2_mats_;
  std::vector<std::vector<int>> g2_words_;
  std::vector<int> g2_signs_;
};

/// Parity of a permutation given as an image array.
int permutation_sign(const std::vector<std::uint8_t>& perm);

/// Product of simple reflections, left to right; the empty word gives the
/// identity.
WeylElement element_from_word(const WeylGroup& wg, const std::vector<int>& word);

}  // namespace kostant
