#pragma once

#include "kostant/multiplicity.hpp"
#include "kostant/rootsys.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kostant {

/// A canonical alternation set: reduced words sorted by (length, lex).
/// Words identify group elements uniquely since they are the canonical
/// lex-least reduced words.
using WordSet = std::vector<std::vector<int>>;

std::string word_set_string(const WordSet& set);

/// Lattice coloring of lambda = m*w1 + n*w2 for a fixed mu over a rank-2
/// system, spanning the full window -bound <= m, n <= bound: cells with
/// equal alternation sets share a set-id. Id 0 is reserved for the empty
/// set; nonempty ids are assigned by first occurrence in row-major (m
/// outer, n inner) order.
struct AlternationGrid {
  Family family;
  int bound;
  Weight mu;
  std::vector<std::vector<int>> cells;    // cells[m + bound][n + bound]
  std::vector<WordSet> palette;           // palette[id]; palette[0] empty
  bool has_empty = false;
};

AlternationGrid alternation_grid(const RootSystem& rs, const Weight& mu, int bound,
                                 int threads = 0);

/// Number of distinct alternation types over the grid, counting the empty
/// type when some cell realizes it.
int distinct_types(const AlternationGrid& grid);

/// Hasse diagram of set containment over a family of distinct sets.
struct AlternationPoset {
  std::vector<WordSet> nodes;                    // sorted by (size, lex)
  std::vector<std::pair<int, int>> cover_edges;  // (subset node, superset node)
};

AlternationPoset build_poset(std::vector<WordSet> sets);

/// Node counts per cardinality level, ascending.
std::vector<int> poset_levels(const AlternationPoset& poset);

/// Formats: grid csv|svg, poset dot|csv. Unsupported combinations throw.
std::string render(const AlternationGrid& grid, const std::string& format);
std::string render(const AlternationPoset& poset, const std::string& format);

}  // namespace kostant
