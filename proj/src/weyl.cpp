#include "kostant/weyl.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace kostant {

int permutation_sign(const std::vector<std::uint8_t>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

std::uint64_t WeylElement::key() const {
  if (perm.empty()) return static_cast<std::uint64_t>(g2);
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    k |= static_cast<std::uint64_t>(perm[i]) << (4 * i);
  k |= static_cast<std::uint64_t>(flips) << 48;
  return k;
}

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(rs) {
  if (rs_.family() != Family::G2) return;
  // Build the 12-element table ordered by (length, lex reduced word).
  const std::array<long, 4> id{1, 0, 0, 1};
  const std::array<long, 4> s1{-1, 0, 3, 1};  // columns: s1(a1), s1(a2)
  const std::array<long, 4> s2{1, 1, 0, -1};
  auto mul = [](const std::array<long, 4>& a, const std::array<long, 4>& b) {
    // column-major 2x2 product a*b
    return std::array<long, 4>{a[0] * b[0] + a[2] * b[1], a[1] * b[0] + a[3] * b[1],
                               a[0] * b[2] + a[2] * b[3], a[1] * b[2] + a[3] * b[3]};
  };
  std::vector<std::vector<int>> frontier_words{{}};
  std::vector<std::array<long, 4>> frontier_mats{id};
  auto seen = [&](const std::array<long, 4>& m) {
    return std::find(g2_mats_.begin(), g2_mats_.end(), m) != g2_mats_.end();
  };
  while (!frontier_words.empty()) {
    std::vector<std::vector<int>> next_words;
    std::vector<std::array<long, 4>> next_mats;
    for (std::size_t k = 0; k < frontier_words.size(); ++k) {
      if (seen(frontier_mats[k])) continue;
      g2_mats_.push_back(frontier_mats[k]);
      g2_words_.push_back(frontier_words[k]);
      long det = frontier_mats[k][0] * frontier_mats[k][3] - frontier_mats[k][1] * frontier_mats[k][2];
      g2_signs_.push_back(det > 0 ? 1 : -1);
      for (int gen = 1; gen <= 2; ++gen) {
        auto w = frontier_words[k];
        w.push_back(gen);
        next_words.push_back(std::move(w));
        next_mats.push_back(mul(frontier_mats[k], gen == 1 ? s1 : s2));
      }
    }
    frontier_words = std::move(next_words);
    frontier_mats = std::move(next_mats);
  }
  if (g2_mats_.size() != 12) throw std::logic_error("G2 table construction failed");
}

unsigned long long WeylGroup::order() const {
  const int r = rs_.rank();
  unsigned long long n = 1;
  switch (rs_.family()) {
    case Family::A:
      for (int i = 2; i <= r + 1; ++i) n *= i;
      return n;
    case Family::B:
      for (int i = 2; i <= r; ++i) n *= i;
      return n << r;
    case Family::G2: return 12;
  }
  return 0;
}

WeylElement WeylGroup::identity() const {
  WeylElement e;
  if (rs_.family() == Family::G2) return e;
  int n = rs_.family() == Family::A ? rs_.rank() + 1 : rs_.rank();
  e.perm.resize(n);
  std::iota(e.perm.begin(), e.perm.end(), 0);
  return e;
}

WeylElement WeylGroup::simple_reflection(int i) const {
  const int r = rs_.rank();
  if (i < 1 || i > r) throw std::invalid_argument("simple reflection index out of range");
  WeylElement e = identity();
  e.sign = -1;
  switch (rs_.family()) {
    case Family::A:
      std::swap(e.perm[i - 1], e.perm[i]);
      return e;
    case Family::B:
      if (i < r)
        std::swap(e.perm[i - 1], e.perm[i]);
      else
        e.flips = 1u << (r - 1);
      return e;
    case Family::G2:
      e.g2 = i;  // table indices 1 and 2 are s1 and s2 by construction
      return e;
  }
  return e;
}

WeylElement WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const {
  WeylElement e;
  if (rs_.family() == Family::G2) {
    auto am = g2_mats_[a.g2];
    auto bm = g2_mats_[b.g2];
    std::array<long, 4> m{am[0] * bm[0] + am[2] * bm[1], am[1] * bm[0] + am[3] * bm[1],
                          am[0] * bm[2] + am[2] * bm[3], am[1] * bm[2] + am[3] * bm[3]};
    e.g2 = g2_index_of(m);
    e.sign = g2_signs_[e.g2];
    return e;
  }
  const std::size_t n = a.perm.size();
  e.perm.resize(n);
  e.flips = 0;
  for (std::size_t i = 0; i < n; ++i) {
    e.perm[i] = a.perm[b.perm[i]];
    std::uint32_t f = ((b.flips >> i) & 1u) ^ ((a.flips >> b.perm[i]) & 1u);
    e.flips |= f << i;
  }
  e.sign = permutation_sign(e.perm) * (std::popcount(e.flips) % 2 == 0 ? 1 : -1);
  return e;
}

WeylElement WeylGroup::inverse(const WeylElement& a) const {
  WeylElement e;
  if (rs_.family() == Family::G2) {
    // finite group: find the index whose product with a gives identity
    for (int i = 0; i < 12; ++i) {
      WeylElement cand;
      cand.g2 = i;
      WeylElement prod = multiply(cand, a);
      if (prod.g2 == 0) {
        cand.sign = g2_signs_[i];
        return cand;
      }
    }
    throw std::logic_error("G2 inverse not found");
  }
  const std::size_t n = a.perm.size();
  e.perm.resize(n);
  e.flips = 0;
  for (std::size_t i = 0; i < n; ++i) e.perm[a.perm[i]] = static_cast<std::uint8_t>(i);
  for (std::size_t j = 0; j < n; ++j)
    e.flips |= ((a.flips >> e.perm[j]) & 1u) << j;
  e.sign = a.sign;
  return e;
}

RatVec WeylGroup::act_root(const WeylElement& e, const RatVec& v) const {
  const int r = rs_.rank();
  if (static_cast<int>(v.size()) != r) throw std::invalid_argument("vector dimension mismatch");
  if (rs_.family() == Family::G2) {
    const auto& m = g2_mats_[e.g2];
    return {m[0] * v[0] + m[2] * v[1], m[1] * v[0] + m[3] * v[1]};
  }
  const int n = rs_.epsilon_dim();
  RatVec eps(n, 0);
  // root coords -> epsilon coords
  for (int i = 0; i < r; ++i) eps[i] = v[i] - (i > 0 ? v[i - 1] : Rational(0));
  if (rs_.family() == Family::A) eps[r] = -v[r - 1];
  RatVec out(n, 0);
  for (int i = 0; i < n; ++i) {
    Rational x = eps[i];
    if ((e.flips >> i) & 1u) x = -x;
    out[e.perm[i]] = x;
  }
  // epsilon coords -> root coords (prefix sums)
  RatVec res(r, 0);
  Rational s = 0;
  for (int i = 0; i < r; ++i) {
    s += out[i];
    res[i] = s;
  }
  return res;
}

void WeylGroup::for_each(const std::function<void(const WeylElement&)>& cb) const {
  if (rs_.family() == Family::G2) {
    for (int i = 0; i < 12; ++i) {
      WeylElement e;
      e.g2 = i;
      e.sign = g2_signs_[i];
      cb(e);
    }
    return;
  }
  const int r = rs_.rank();
  const std::uint32_t nflips = rs_.family() == Family::B ? (1u << r) : 1u;
  WeylElement e = identity();
  do {
    int psign = permutation_sign(e.perm);
    for (std::uint32_t f = 0; f < nflips; ++f) {
      e.flips = f;
      e.sign = psign * (std::popcount(f) % 2 == 0 ? 1 : -1);
      cb(e);
    }
    e.flips = 0;
  } while (std::next_permutation(e.perm.begin(), e.perm.end()));
}

std::vector<int> WeylGroup::reduced_word(const WeylElement& e) const {
  if (rs_.family() == Family::G2) return g2_words_[e.g2];
  // Greedy smallest left descent. A left descent at i means e^{-1}(alpha_i)
  // is a negative root, decided from the inverse position array and flip
  // bits without any arithmetic on weights.
  const int r = rs_.rank();
  const int n = static_cast<int>(e.perm.size());
  std::vector<int> pinv(n);
  for (int i = 0; i < n; ++i) pinv[e.perm[i]] = i;
  std::uint32_t flips = e.flips;
  std::vector<int> word;
  const bool type_b = rs_.family() == Family::B;
  for (;;) {
    int descent = 0;
    for (int i = 1; i <= r; ++i) {
      if (type_b && i == r) {
        // alpha_r = eps_r; negative image iff the sign at its source is set
        if ((flips >> pinv[r - 1]) & 1u) descent = i;
      } else {
        // alpha_i = eps_i - eps_{i+1}; the image has support {a, b} and its
        // leading epsilon coordinate decides positivity
        int a = pinv[i - 1], b = pinv[i];
        bool sa = (flips >> a) & 1u, sb = (flips >> b) & 1u;
        if (a < b ? sa : !sb) descent = i;
      }
      if (descent != 0) break;
    }
    if (descent == 0) break;
    word.push_back(descent);
    // apply s_descent on the left
    if (type_b && descent == r) {
      flips ^= 1u << pinv[r - 1];
    } else {
      std::swap(pinv[descent - 1], pinv[descent]);
    }
  }
  return word;
}

std::string WeylGroup::word_string(const std::vector<int>& word) {
  if (word.empty()) return "1";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i);
  return s;
}

const std::array<long, 4>& WeylGroup::g2_matrix(int index) const { return g2_mats_[index]; }

WeylElement element_from_word(const WeylGroup& wg, const std::vector<int>& word) {
  WeylElement e = wg.identity();
  for (int i : word) e = wg.multiply(e, wg.simple_reflection(i));
  return e;
}

int WeylGroup::g2_index_of(const std::array<long, 4>& m) const {
  for (int i = 0; i < 12; ++i)
    if (g2_mats_[i] == m) return i;
  throw std::logic_error("matrix not in G2 table");
}

}  // namespace kostant
