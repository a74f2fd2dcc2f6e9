#pragma once

#include "kostant/atlas.hpp"
#include "kostant/classify.hpp"
#include "kostant/qpoly.hpp"

#include <string>
#include <vector>

namespace kostant {

struct TableRow {
  long ell;
  IntVec mu;       // m_1..m_r
  QPolynomial mq;
  WordSet altset;  // canonical words, (length, lex) sorted
};

/// Rows of the q-multiplicity reference table for lambda = ell*w1 (types A
/// and B), ell = 1..ell_max, every admissible mu. Within an ell block rows
/// sort by |altset| descending, then m_q degree descending, then mu
/// descending-lex.
std::vector<TableRow> appendix_table(Family family, int rank, long ell_max, int threads = 0);

/// "3w1+2w2" style ASCII form of FW coefficients; "0" for the zero weight.
std::string weight_spec_string(const IntVec& mu);

std::string table_markdown(Family family, int rank, const std::vector<TableRow>& rows);
std::string table_csv(Family family, int rank, const std::vector<TableRow>& rows);
std::string table_json(Family family, int rank, const std::vector<TableRow>& rows);

}  // namespace kostant
