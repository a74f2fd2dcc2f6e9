#include "kostant/multiplicity.hpp"

#include "json.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kostant {

namespace {

std::vector<long> integral_fw_coords(const RootSystem& rs, const Weight& w, const char* what) {
  if (w.basis != Basis::FundamentalWeights)
    throw std::invalid_argument(std::string(what) + " must be given in FW coordinates");
  if (static_cast<int>(w.coords.size()) != rs.rank())
    throw std::invalid_argument(std::string(what) + " dimension mismatch");
  std::vector<long> out(w.coords.size());
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (w.coords[i].get_den() != 1)
      throw std::invalid_argument(std::string(what) + " must be integral");
    out[i] = w.coords[i].get_num().get_si();
  }
  return out;
}

// epsilon coordinates of a weight with FW coords c, shifted by rho
// (c_i + 1). Type A drops the mean; type B doubles so entries stay integer.
std::vector<long> eps_shifted(const RootSystem& rs, const std::vector<long>& c) {
  const int r = rs.rank();
  if (rs.family() == Family::A) {
    std::vector<long> a(r + 1, 0);
    for (int k = r - 1; k >= 0; --k) a[k] = a[k + 1] + c[k] + 1;
    return a;
  }
  // type B, doubled
  std::vector<long> a(r, 0);
  a[r - 1] = c[r - 1] + 1;
  long acc = 0;
  for (int k = r - 2; k >= 0; --k) {
    acc += 2 * (c[k] + 1);
    a[k] = acc + c[r - 1] + 1;
  }
  return a;
}

std::vector<std::uint8_t> unrank_perm(int n, unsigned long long rank) {
  std::vector<unsigned long long> fact(n, 1);
  for (int i = 1; i < n; ++i) fact[i] = fact[i - 1] * i;
  std::vector<std::uint8_t> avail(n);
  std::iota(avail.begin(), avail.end(), 0);
  std::vector<std::uint8_t> out(n);
  for (int i = 0; i < n; ++i) {
    unsigned long long f = fact[n - 1 - i];
    std::size_t d = static_cast<std::size_t>(rank / f);
    rank %= f;
    out[i] = avail[d];
    avail.erase(avail.begin() + static_cast<long>(d));
  }
  return out;
}

int perm_parity(const std::vector<std::uint8_t>& q) { return permutation_sign(q); }

}  // namespace

KostantEvaluator::KostantEvaluator(const RootSystem& rs, int threads, std::size_t memo_cap_bytes)
    : rs_(rs), wg_(rs), threads_(threads), memo_cap_(memo_cap_bytes) {}

PartitionEvaluator& KostantEvaluator::chunk_evaluator(std::size_t idx) const {
  // grown only outside parallel regions, so workers can index freely
  while (pe_pool_.size() <= idx)
    pe_pool_.push_back(std::make_unique<PartitionEvaluator>(rs_, memo_cap_));
  return *pe_pool_[idx];
}

void KostantEvaluator::scan(const Weight& lambda, const Weight& mu, bool collect,
                            QPolynomial& total, std::vector<Survivor>& survivors) const {
  const int r = rs_.rank();
  std::vector<long> lc = integral_fw_coords(rs_, lambda, "lambda");
  std::vector<long> mc = integral_fw_coords(rs_, mu, "mu");
  total = QPolynomial{};
  survivors.clear();

  if (rs_.family() == Family::G2) {
    // integer root coordinates directly
    long l0 = 2 * (lc[0] + 1) + 3 * (lc[1] + 1), l1 = (lc[0] + 1) + 2 * (lc[1] + 1);
    long m0 = 2 * (mc[0] + 1) + 3 * (mc[1] + 1), m1 = (mc[0] + 1) + 2 * (mc[1] + 1);
    PartitionEvaluator& pe = chunk_evaluator(0);
    wg_.for_each([&](const WeylElement& e) {
      const auto& m = wg_.g2_matrix(e.g2);
      long x0 = m[0] * l0 + m[2] * l1 - m0;
      long x1 = m[1] * l0 + m[3] * l1 - m1;
      if (x0 < 0 || x1 < 0) return;
      QPolynomial p = pe.count_q(IntVec{x0, x1});
      if (e.sign > 0)
        total += p;
      else
        total -= p;
      if (collect) survivors.push_back({e, std::move(p)});
    });
    return;
  }

  const bool type_b = rs_.family() == Family::B;
  const int n = type_b ? r : r + 1;
  std::vector<long> a = eps_shifted(rs_, lc);
  std::vector<long> b = eps_shifted(rs_, mc);

  long t = 0;
  if (!type_b) {
    long suma = std::accumulate(a.begin(), a.end(), 0L);
    long sumb = std::accumulate(b.begin(), b.end(), 0L);
    if ((suma - sumb) % n != 0) return;  // never in the root lattice
    t = (suma - sumb) / n;
  }

  unsigned long long nperm = 1;
  for (int i = 2; i <= n; ++i) nperm *= i;
  const unsigned long long per_perm = type_b ? (1ull << r) : 1ull;
  const unsigned long long count = nperm * per_perm;

  int nthreads = threads_;
#ifdef _OPENMP
  if (nthreads <= 0) nthreads = omp_get_max_threads();
#else
  nthreads = 1;
#endif
  const int nchunks = static_cast<int>(
      std::min<unsigned long long>(count, static_cast<unsigned long long>(std::max(nthreads, 1))));
  std::vector<QPolynomial> partials(nchunks);
  std::vector<std::vector<Survivor>> found(nchunks);
  chunk_evaluator(static_cast<std::size_t>(nchunks) - 1);  // preallocate the pool

#ifdef _OPENMP
#pragma omp parallel for schedule(static, 1) num_threads(nthreads)
#endif
  for (int chunk = 0; chunk < nchunks; ++chunk) {
    unsigned long long lo = count * chunk / nchunks;
    unsigned long long hi = count * (chunk + 1) / nchunks;
    PartitionEvaluator& pe = chunk_evaluator(static_cast<std::size_t>(chunk));
    std::vector<std::uint8_t> q = unrank_perm(n, lo / per_perm);
    unsigned long long mask = lo % per_perm;
    IntVec x(r);
    QPolynomial& part = partials[chunk];
    for (unsigned long long g = lo; g < hi; ++g) {
      bool ok = true;
      long s = 0;
      for (int k = 0; k < r; ++k) {
        long v = a[q[k]];
        if (type_b) {
          if ((mask >> k) & 1u) v = -v;
          s += v - b[k];
          if (s < 0 || (s & 1)) { ok = false; break; }
          x[k] = s >> 1;
        } else {
          s += v - b[k];
          long xv = s - static_cast<long>(k + 1) * t;
          if (xv < 0) { ok = false; break; }
          x[k] = xv;
        }
      }
      if (ok) {
        QPolynomial p = pe.count_q(x);
        int sign = perm_parity(q);
        if (type_b && (std::popcount(mask) & 1u)) sign = -sign;
        if (sign > 0)
          part += p;
        else
          part -= p;
        if (collect) {
          WeylElement e;
          e.perm.resize(n);
          e.flips = 0;
          for (int j = 0; j < n; ++j) e.perm[q[j]] = static_cast<std::uint8_t>(j);
          if (type_b)
            for (int j = 0; j < n; ++j) e.flips |= static_cast<std::uint32_t>((mask >> j) & 1u) << q[j];
          e.sign = sign;
          found[chunk].push_back({std::move(e), std::move(p)});
        }
      }
      if (++mask == per_perm) {
        mask = 0;
        std::next_permutation(q.begin(), q.end());
      }
    }
  }

  for (int chunk = 0; chunk < nchunks; ++chunk) {
    total += partials[chunk];
    if (collect)
      for (auto& s2 : found[chunk]) survivors.push_back(std::move(s2));
  }
}

QPolynomial KostantEvaluator::multiplicity_q(const Weight& lambda, const Weight& mu) const {
  QPolynomial total;
  std::vector<Survivor> none;
  scan(lambda, mu, false, total, none);
  return total;
}

mpz_class KostantEvaluator::multiplicity(const Weight& lambda, const Weight& mu) const {
  return multiplicity_q(lambda, mu).eval_at_one();
}

AlternationRecord KostantEvaluator::alternation_record(const Weight& lambda,
                                                       const Weight& mu) const {
  AlternationRecord rec;
  rec.lambda = lambda;
  rec.mu = mu;
  std::vector<Survivor> survivors;
  scan(lambda, mu, true, rec.mq, survivors);
  rec.m = rec.mq.eval_at_one();
  rec.set.reserve(survivors.size());
  for (auto& s : survivors) {
    TermRecord term;
    term.word = wg_.reduced_word(s.element);
    term.sign = s.element.sign;
    term.element = std::move(s.element);
    term.contribution = std::move(s.contribution);
    rec.set.push_back(std::move(term));
  }
  std::sort(rec.set.begin(), rec.set.end(), [](const TermRecord& a, const TermRecord& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  return rec;
}

QPolynomial KostantEvaluator::multiplicity_q_serial(const Weight& lambda, const Weight& mu) const {
  const int r = rs_.rank();
  Weight lr = rs_.to_root_coords(lambda);
  Weight mr = rs_.to_root_coords(mu);
  RatVec top(r), target(r);
  for (int i = 0; i < r; ++i) {
    top[i] = lr.coords[i] + rs_.rho_root()[i];
    target[i] = mr.coords[i] + rs_.rho_root()[i];
  }
  PartitionEvaluator pe(rs_, memo_cap_);
  QPolynomial total;
  wg_.for_each([&](const WeylElement& e) {
    RatVec img = wg_.act_root(e, top);
    for (int i = 0; i < r; ++i) img[i] -= target[i];
    QPolynomial p = pe.count_q(img);
    if (p.is_zero()) return;
    if (e.sign > 0)
      total += p;
    else
      total -= p;
  });
  return total;
}

namespace {

// reflect into the dominant chamber, in root coordinates
RatVec dominantize(const RootSystem& rs, RatVec x) {
  const int r = rs.rank();
  const auto& cartan = rs.cartan();
  for (;;) {
    int neg = -1;
    Rational f;
    for (int i = 0; i < r && neg < 0; ++i) {
      f = 0;
      for (int j = 0; j < r; ++j) f += Rational(cartan[j][i]) * x[j];
      if (f < 0) neg = i;
    }
    if (neg < 0) return x;
    x[neg] -= f;
  }
}

}  // namespace

mpz_class freudenthal_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  const int r = rs.rank();
  std::vector<long> lc = integral_fw_coords(rs, lambda, "lambda");
  for (long v : lc)
    if (v < 0) throw std::invalid_argument("lambda must be dominant");
  (void)integral_fw_coords(rs, mu, "mu");

  Weight lam_root = rs.to_root_coords(lambda);
  Weight mu_root_w = rs.to_root_coords(mu);
  const RatVec& rho = rs.rho_root();

  // candidate depths: lambda - nu = sum c_i alpha_i with 0 <= c_i <= floor(lambda_i)
  std::vector<long> bound(r);
  unsigned long long volume = 1;
  for (int i = 0; i < r; ++i) {
    mpz_class fl = lam_root.coords[i].get_num() / lam_root.coords[i].get_den();
    bound[i] = fl.get_si();
    volume *= static_cast<unsigned long long>(bound[i] + 1);
    if (volume > 4000000ull)
      throw CostGuardError("dominant weight diagram too large for the Freudenthal oracle");
  }

  // enumerate dominant weights nu = lambda - c, keyed by c
  std::map<IntVec, mpz_class> mult;
  std::vector<IntVec> depths;
  IntVec c(r, 0);
  const auto& cartan = rs.cartan();
  for (;;) {
    bool dominant = true;
    for (int i = 0; i < r && dominant; ++i) {
      long f = lc[i];
      for (int j = 0; j < r; ++j) f -= cartan[j][i] * c[j];
      if (f < 0) dominant = false;
    }
    if (dominant) depths.push_back(c);
    int i = 0;
    while (i < r && c[i] == bound[i]) c[i++] = 0;
    if (i == r) break;
    ++c[i];
  }
  std::sort(depths.begin(), depths.end(), [](const IntVec& a, const IntVec& b) {
    long ha = std::accumulate(a.begin(), a.end(), 0L);
    long hb = std::accumulate(b.begin(), b.end(), 0L);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  auto mult_at = [&](const RatVec& nu_root) -> mpz_class {
    RatVec dom = dominantize(rs, nu_root);
    IntVec key(r);
    for (int i = 0; i < r; ++i) {
      Rational d = lam_root.coords[i] - dom[i];
      if (d.get_den() != 1 || d < 0) return 0;
      key[i] = d.get_num().get_si();
    }
    auto it = mult.find(key);
    return it == mult.end() ? mpz_class(0) : it->second;
  };

  RatVec lam_rho(r);
  for (int i = 0; i < r; ++i) lam_rho[i] = lam_root.coords[i] + rho[i];
  Rational lam_norm = rs.inner(lam_rho, lam_rho);

  for (const IntVec& depth : depths) {
    long h = std::accumulate(depth.begin(), depth.end(), 0L);
    if (h == 0) {
      mult[depth] = 1;
      continue;
    }
    RatVec nu(r);
    for (int i = 0; i < r; ++i) nu[i] = lam_root.coords[i] - depth[i];
    Rational num = 0;
    for (const IntVec& alpha : rs.positive_roots()) {
      RatVec alpha_rat(alpha.begin(), alpha.end());
      for (long k = 1;; ++k) {
        bool inside = true;
        RatVec nuk(r);
        for (int i = 0; i < r; ++i) {
          nuk[i] = nu[i] + k * alpha[i];
          if (lam_root.coords[i] - nuk[i] < 0) inside = false;
        }
        if (!inside) break;
        mpz_class mk = mult_at(nuk);
        if (mk != 0) num += Rational(mk) * rs.inner(nuk, alpha_rat);
      }
    }
    RatVec nu_rho(r);
    for (int i = 0; i < r; ++i) nu_rho[i] = nu[i] + rho[i];
    Rational denom = lam_norm - rs.inner(nu_rho, nu_rho);
    Rational res = 2 * num / denom;
    if (res.get_den() != 1) throw std::logic_error("Freudenthal recursion gave a non-integer");
    mult[depth] = res.get_num();
  }

  RatVec mu_dom = dominantize(rs, mu_root_w.coords);
  IntVec key(r);
  for (int i = 0; i < r; ++i) {
    Rational d = lam_root.coords[i] - mu_dom[i];
    if (d.get_den() != 1 || d < 0) return 0;
    key[i] = d.get_num().get_si();
  }
  auto it = mult.find(key);
  return it == mult.end() ? mpz_class(0) : it->second;
}

std::string alternation_record_json(const AlternationRecord& rec) {
  nlohmann::ordered_json j;
  auto coords_to_json = [](const RatVec& v) {
    std::vector<long> out;
    out.reserve(v.size());
    for (const auto& c : v) out.push_back(c.get_num().get_si());
    return out;
  };
  auto poly_to_json = [](const QPolynomial& p) {
    std::vector<long> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_si());
    return out;
  };
  j["lambda"] = coords_to_json(rec.lambda.coords);
  j["mu"] = coords_to_json(rec.mu.coords);
  j["mq"] = {{"coeffs", poly_to_json(rec.mq)}};
  j["m"] = rec.m.get_si();
  auto& set = j["set"] = nlohmann::ordered_json::array();
  for (const TermRecord& term : rec.set) {
    nlohmann::ordered_json t;
    t["word"] = WeylGroup::word_string(term.word);
    t["sign"] = term.sign;
    t["contribution"] = poly_to_json(term.contribution);
    set.push_back(std::move(t));
  }
  return j.dump();
}

}  // namespace kostant
