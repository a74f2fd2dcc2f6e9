// Compares the integer OpenMP kernel against the serial rational
// reference on a few medium pairs and reports timings.

#include "kostant/multiplicity.hpp"
#include "kostant/weightspec.hpp"

#include <chrono>
#include <iostream>

using namespace kostant;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void bench(Family family, int rank, const std::string& lambda_spec, const std::string& mu_spec) {
  RootSystem rs(family, rank);
  Weight lambda = parse_weight_spec(lambda_spec, rank);
  Weight mu = parse_weight_spec(mu_spec, rank);

  KostantEvaluator parallel(rs);
  auto t0 = std::chrono::steady_clock::now();
  QPolynomial fast = parallel.multiplicity_q(lambda, mu);
  double t_par = ms_since(t0);

  KostantEvaluator single(rs, 1);
  t0 = std::chrono::steady_clock::now();
  QPolynomial one_thread = single.multiplicity_q(lambda, mu);
  double t_one = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  QPolynomial ref = single.multiplicity_q_serial(lambda, mu);
  double t_ref = ms_since(t0);

  bool ok = fast == one_thread && fast == ref;
  std::cout << family_name(family) << rank << "  lambda=" << lambda_spec << " mu=" << mu_spec
            << "  m_q=" << fast.to_string() << "\n"
            << "  parallel " << t_par << " ms, single-thread " << t_one
            << " ms, rational reference " << t_ref << " ms, agree: " << (ok ? "yes" : "NO")
            << "\n";
  if (!ok) std::exit(1);
}

}  // namespace

int main() {
  bench(Family::A, 6, "10w1", "0");
  bench(Family::A, 7, "10w1", "2w1+4w2");
  bench(Family::B, 5, "9w1", "4w2+2w3");
  bench(Family::B, 6, "7w1", "2w6");
  return 0;
}
