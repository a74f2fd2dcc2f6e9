#include "CLI11.hpp"

#include "kostant/atlas.hpp"
#include "kostant/classify.hpp"
#include "kostant/multiplicity.hpp"
#include "kostant/table.hpp"
#include "kostant/weightspec.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace {

using namespace kostant;

Family parse_family(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "G2") return Family::G2;
  throw std::invalid_argument("unknown family '" + s + "' (expected A, B, or G2)");
}

struct Options {
  std::string family = "A";
  int rank = 0;
  std::string lambda;
  std::string mu = "0";
  long ell_max = 10;
  int bound = 0;
  std::string format;
  std::string out;
  int threads = 0;
  unsigned long long memo_cap = 1ull << 31;
};

void add_common(CLI::App* cmd, Options& opt, bool weights) {
  cmd->add_option("--family", opt.family, "Lie algebra family: A, B, or G2");
  cmd->add_option("--rank", opt.rank, "rank of the root system");
  if (weights) {
    cmd->add_option("--lambda", opt.lambda, "highest weight, e.g. 3w1+2w2, [3,2], or 0");
    cmd->add_option("--mu", opt.mu, "target weight");
  }
  cmd->add_option("--threads", opt.threads, "worker threads (default: KOSTANT_THREADS or all)");
  cmd->add_option("--memo-cap", opt.memo_cap, "partition memo cap in bytes");
}

int effective_rank(Family f, int rank) {
  if (f == Family::G2) return 2;
  if (rank <= 0) throw std::invalid_argument("--rank is required for types A and B");
  return rank;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file " + opt.out);
  f << text;
}

WordSet record_word_set(const AlternationRecord& rec) {
  WordSet words;
  for (const TermRecord& t : rec.set) words.push_back(t.word);
  return words;
}

int run_verify(Family family, int rank, long ell_max, int threads) {
  RootSystem rs(family, rank);
  WeylGroup wg(rs);
  KostantEvaluator ke(rs, threads);
  long covered = 0, total = 0, mismatches = 0;
  for (long ell = 1; ell <= ell_max; ++ell) {
    for (const MultOneCase& c : mult_one_mus(family, rank, ell)) {
      ++total;
      auto pred_set = predicted_alternation_set(c);
      auto pred_mq = predicted_qmultiplicity(c);
      if (!pred_set && !pred_mq) continue;
      ++covered;
      AlternationRecord rec = ke.alternation_record(c.lambda_weight(), c.mu_weight());
      bool ok = true;
      if (pred_set) {
        std::set<std::uint64_t> want, got;
        for (const auto& w : *pred_set) want.insert(element_from_word(wg, w).key());
        for (const TermRecord& t : rec.set) got.insert(t.element.key());
        ok = ok && want == got;
      }
      if (pred_mq) ok = ok && *pred_mq == rec.mq;
      if (!ok) {
        ++mismatches;
        std::cout << "MISMATCH ell=" << ell << " mu=" << weight_spec_string(c.mu) << "\n";
      }
    }
  }
  std::cout << "theorem oracles: " << total << " pairs, " << covered << " covered, " << mismatches
            << " mismatches\n";
  if (rank <= 3) {
    for (long ell = 1; ell <= std::min(ell_max, 6L); ++ell) {
      bool ok = verify_bz_small(rs, ell);
      std::cout << "classification check ell=" << ell << ": " << (ok ? "ok" : "FAILED") << "\n";
      if (!ok) ++mismatches;
    }
  }
  return mismatches == 0 ? 0 : 1;
}

int dispatch(const CLI::App& app, Options& opt) {
  Family family = parse_family(opt.family);
  const char* env_threads = std::getenv("KOSTANT_THREADS");
  if (opt.threads == 0 && env_threads) opt.threads = std::atoi(env_threads);

  auto on = [&](const char* name) { return app.get_subcommand(name)->parsed(); };

  if (on("mult") || on("qmult") || on("altset")) {
    int rank = effective_rank(family, opt.rank);
    RootSystem rs(family, rank);
    KostantEvaluator ke(rs, opt.threads, opt.memo_cap);
    if (opt.lambda.empty()) throw std::invalid_argument("--lambda is required");
    Weight lambda = parse_weight_spec(opt.lambda, rank);
    Weight mu = parse_weight_spec(opt.mu, rank);
    if (on("mult")) {
      emit(opt, ke.multiplicity(lambda, mu).get_str());
    } else if (on("qmult")) {
      emit(opt, ke.multiplicity_q(lambda, mu).to_string());
    } else {
      AlternationRecord rec = ke.alternation_record(lambda, mu);
      if (opt.format == "json")
        emit(opt, alternation_record_json(rec));
      else
        emit(opt, word_set_string(record_word_set(rec)));
    }
    return 0;
  }

  if (on("pairs")) {
    int rank = effective_rank(family, opt.rank);
    std::ostringstream out;
    out << "ell,mu\n";
    for (long ell = 1; ell <= opt.ell_max; ++ell)
      for (const MultOneCase& c : mult_one_mus(family, rank, ell))
        out << ell << "," << weight_spec_string(c.mu) << "\n";
    emit(opt, out.str());
    return 0;
  }

  if (on("table")) {
    int rank = effective_rank(family, opt.rank);
    if (family == Family::A && rank > 8)
      std::cerr << "warning: type A tables above rank 8 take a long time\n";
    auto rows = appendix_table(family, rank, opt.ell_max, opt.threads);
    std::string fmt = opt.format.empty() ? "md" : opt.format;
    if (fmt == "md")
      emit(opt, table_markdown(family, rank, rows));
    else if (fmt == "csv")
      emit(opt, table_csv(family, rank, rows));
    else if (fmt == "json")
      emit(opt, table_json(family, rank, rows));
    else
      throw std::invalid_argument("table formats: md, csv, json");
    return 0;
  }

  if (on("scan")) {
    int rank = effective_rank(family, opt.rank);
    ScanReport report = scan_conjecture(family, rank, rank, 1, opt.ell_max, opt.threads);
    std::string fmt = opt.format.empty() ? "md" : opt.format;
    if (fmt == "md")
      emit(opt, scan_report_markdown(report));
    else if (fmt == "json")
      emit(opt, scan_report_json(report));
    else
      throw std::invalid_argument("scan formats: md, json");
    return report.violations.empty() ? 0 : 1;
  }

  if (on("grid") || on("poset")) {
    if (family != Family::G2 && opt.rank != 0 && opt.rank != 2)
      throw std::invalid_argument("grids and posets need a rank-2 system");
    RootSystem rs(family, 2);
    int bound = opt.bound > 0 ? opt.bound : (family == Family::G2 ? 30 : 20);
    Weight mu = parse_weight_spec(opt.mu, 2);
    AlternationGrid grid = alternation_grid(rs, mu, bound, opt.threads);
    if (on("grid")) {
      std::string fmt = opt.format.empty() ? "csv" : opt.format;
      emit(opt, render(grid, fmt));
    } else {
      std::vector<WordSet> sets(grid.palette.begin() + 1, grid.palette.end());
      if (grid.has_empty) sets.push_back({});
      AlternationPoset poset = build_poset(std::move(sets));
      std::string fmt = opt.format.empty() ? "dot" : opt.format;
      emit(opt, render(poset, fmt));
    }
    return 0;
  }

  if (on("verify")) {
    int rank = effective_rank(family, opt.rank);
    return run_verify(family, rank, opt.ell_max, opt.threads);
  }

  throw std::invalid_argument("no subcommand given");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Kostant weight multiplicities, q-analogs, and Weyl alternation sets"};
  app.require_subcommand(0, 1);
  Options opt;

  auto* mult = app.add_subcommand("mult", "weight multiplicity m(lambda, mu)");
  auto* qmult = app.add_subcommand("qmult", "q-multiplicity m_q(lambda, mu)");
  auto* altset = app.add_subcommand("altset", "Weyl alternation set of (lambda, mu)");
  auto* pairs = app.add_subcommand("pairs", "enumerate multiplicity-one mu for each ell");
  auto* table = app.add_subcommand("table", "reference table of m_q over all admissible pairs");
  auto* scan = app.add_subcommand("scan", "check that every m_q in range is a pure power of q");
  auto* grid = app.add_subcommand("grid", "rank-2 alternation diagram over lambda");
  auto* poset = app.add_subcommand("poset", "containment poset of the grid's alternation sets");
  auto* verify = app.add_subcommand("verify", "compare closed-form predictions with brute force");

  for (auto* cmd : {mult, qmult, altset}) add_common(cmd, opt, true);
  for (auto* cmd : {pairs, table, scan, verify}) {
    add_common(cmd, opt, false);
    cmd->add_option("--ell-max", opt.ell_max, "largest ell to cover");
  }
  for (auto* cmd : {grid, poset}) {
    add_common(cmd, opt, false);
    cmd->add_option("--mu", opt.mu, "fixed mu of the diagram");
    cmd->add_option("--bound", opt.bound, "lattice bound (default 20, G2 30)");
  }
  for (auto* cmd : {altset, table, scan, grid, poset}) {
    cmd->add_option("--format", opt.format, "output format");
    cmd->add_option("--out", opt.out, "write output to a file instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 64;
  }

  try {
    return dispatch(app, opt);
  } catch (const kostant::CostGuardError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
