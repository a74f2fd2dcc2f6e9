#include "kostant/table.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace kostant {

std::string weight_spec_string(const IntVec& mu) {
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] == 0) continue;
    if (any) out << "+";
    out << mu[i] << "w" << (i + 1);
    any = true;
  }
  return any ? out.str() : "0";
}

std::vector<TableRow> appendix_table(Family family, int rank, long ell_max, int threads) {
  if (family == Family::A && rank > 10)
    throw CostGuardError("type A tables are limited to rank 10");
  if (family == Family::B && rank > 6)
    throw CostGuardError("type B tables are limited to rank 6");
  if (family == Family::G2 && rank != 2) throw std::invalid_argument("G2 has rank 2");

  RootSystem rs(family, rank);
  KostantEvaluator ke(rs, threads);
  std::vector<TableRow> rows;
  for (long ell = 1; ell <= ell_max; ++ell) {
    std::vector<TableRow> block;
    for (const MultOneCase& c : mult_one_mus(family, rank, ell)) {
      TableRow row;
      row.ell = ell;
      row.mu = c.mu;
      AlternationRecord rec = ke.alternation_record(c.lambda_weight(), c.mu_weight());
      row.mq = std::move(rec.mq);
      row.altset.reserve(rec.set.size());
      for (const TermRecord& t : rec.set) row.altset.push_back(t.word);
      block.push_back(std::move(row));
    }
    std::sort(block.begin(), block.end(), [](const TableRow& a, const TableRow& b) {
      if (a.altset.size() != b.altset.size()) return a.altset.size() > b.altset.size();
      if (a.mq.degree() != b.mq.degree()) return a.mq.degree() > b.mq.degree();
      return a.mu > b.mu;
    });
    for (auto& row : block) rows.push_back(std::move(row));
  }
  return rows;
}

std::string table_markdown(Family family, int rank, const std::vector<TableRow>& rows) {
  std::ostringstream out;
  bool type_a = family == Family::A;
  out << "| lambda | mu | m_q | " << (type_a ? "|A|" : "alternation set") << " |\n";
  out << "|---|---|---|---|\n";
  for (const TableRow& row : rows) {
    out << "| " << row.ell << "w1 | " << weight_spec_string(row.mu) << " | "
        << row.mq.to_string() << " | ";
    if (type_a)
      out << row.altset.size();
    else {
      for (std::size_t i = 0; i < row.altset.size(); ++i) {
        if (i) out << ", ";
        out << WeylGroup::word_string(row.altset[i]);
      }
    }
    out << " |\n";
  }
  return out.str();
}

std::string table_csv(Family family, int rank, const std::vector<TableRow>& rows) {
  std::ostringstream out;
  bool type_a = family == Family::A;
  out << "ell,mu,mq," << (type_a ? "card" : "altset") << "\n";
  for (const TableRow& row : rows) {
    out << row.ell << "," << weight_spec_string(row.mu) << "," << row.mq.to_string() << ",";
    if (type_a)
      out << row.altset.size();
    else {
      out << "\"";
      for (std::size_t i = 0; i < row.altset.size(); ++i) {
        if (i) out << " ";
        out << WeylGroup::word_string(row.altset[i]);
      }
      out << "\"";
    }
    out << "\n";
  }
  return out.str();
}

std::string table_json(Family family, int rank, const std::vector<TableRow>& rows) {
  nlohmann::ordered_json j;
  j["family"] = family_name(family);
  j["rank"] = rank;
  auto& jr = j["rows"] = nlohmann::ordered_json::array();
  for (const TableRow& row : rows) {
    nlohmann::ordered_json e;
    e["ell"] = row.ell;
    e["mu"] = row.mu;
    e["mq"] = row.mq.to_string();
    std::vector<std::string> words;
    words.reserve(row.altset.size());
    for (const auto& w : row.altset) words.push_back(WeylGroup::word_string(w));
    e["altset"] = words;
    jr.push_back(std::move(e));
  }
  return j.dump();
}

}  // namespace kostant
