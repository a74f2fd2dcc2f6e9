#include "doctest.h"

#include "kostant/atlas.hpp"

#include <algorithm>
#include <set>

using namespace kostant;

namespace {

WordSet record_words(const AlternationRecord& rec) {
  WordSet out;
  for (const TermRecord& t : rec.set) out.push_back(t.word);
  std::sort(out.begin(), out.end());
  return out;
}

bool subset_of(const WordSet& a, const WordSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<WordSet> grid_types(const AlternationGrid& grid) {
  std::vector<WordSet> sets(grid.palette.begin() + 1, grid.palette.end());
  if (grid.has_empty) sets.push_back({});
  return sets;
}

}  // namespace

TEST_CASE("distinct alternation types at mu = 0") {
  {
    RootSystem a2(Family::A, 2);
    AlternationGrid grid = alternation_grid(a2, Weight::fw({0, 0}), 20);
    CHECK(distinct_types(grid) == 13);
    CHECK(grid.has_empty);
    CHECK(grid.palette.size() == 13);  // 12 nonempty + reserved id 0
  }
  {
    RootSystem b2(Family::B, 2);
    AlternationGrid grid = alternation_grid(b2, Weight::fw({0, 0}), 20);
    CHECK(distinct_types(grid) == 25);
    CHECK(grid.palette.size() == 25);
  }
  {
    RootSystem g2(Family::G2, 2);
    AlternationGrid grid = alternation_grid(g2, Weight::fw({0, 0}), 30);
    CHECK(distinct_types(grid) == 61);
    CHECK(grid.palette.size() == 61);
  }
}

TEST_CASE("type counts are stable under a larger bound") {
  RootSystem a2(Family::A, 2);
  AlternationGrid small = alternation_grid(a2, Weight::fw({0, 0}), 20);
  AlternationGrid large = alternation_grid(a2, Weight::fw({0, 0}), 30);
  CHECK(distinct_types(small) == distinct_types(large));
}

TEST_CASE("grid cells agree with direct evaluation") {
  RootSystem b2(Family::B, 2);
  Weight mu = Weight::fw({1, 0});
  AlternationGrid grid = alternation_grid(b2, mu, 3);
  KostantEvaluator ke(b2);
  REQUIRE(grid.cells.size() == 7);
  for (int m = 0; m <= 6; ++m) {
    REQUIRE(grid.cells[m].size() == 7);
    for (int n = 0; n <= 6; ++n) {
      auto rec = ke.alternation_record(Weight::fw({m - 3, n - 3}), mu);
      WordSet direct = record_words(rec);
      WordSet from_grid = grid.palette[grid.cells[m][n]];
      std::sort(from_grid.begin(), from_grid.end());
      CHECK(direct == from_grid);
    }
  }
}

TEST_CASE("nonempty palette ids appear in row-major first-occurrence order") {
  RootSystem a2(Family::A, 2);
  AlternationGrid grid = alternation_grid(a2, Weight::fw({0, 0}), 10);
  int next = 1;
  for (const auto& row : grid.cells)
    for (int id : row) {
      CHECK(id >= 0);
      CHECK(id < static_cast<int>(grid.palette.size()));
      if (id == next) ++next;
      CHECK(id < next);
    }
  CHECK(next == static_cast<int>(grid.palette.size()));
}

TEST_CASE("poset structure for the mu = 0 grids") {
  {
    RootSystem a2(Family::A, 2);
    AlternationGrid grid = alternation_grid(a2, Weight::fw({0, 0}), 20);
    AlternationPoset poset = build_poset(grid_types(grid));
    CHECK(poset_levels(poset) == std::vector<int>{1, 6, 6});
    // 6 edges from the empty set up to the singletons plus 12 from the
    // two-element sets down to their singletons
    CHECK(poset.cover_edges.size() == 18);
    int from_bottom = 0, to_pairs = 0;
    for (auto [a, b] : poset.cover_edges) {
      if (poset.nodes[a].empty()) ++from_bottom;
      if (poset.nodes[b].size() == 2) ++to_pairs;
    }
    CHECK(from_bottom == 6);
    CHECK(to_pairs == 12);
  }
  {
    RootSystem b2(Family::B, 2);
    AlternationGrid grid = alternation_grid(b2, Weight::fw({0, 0}), 20);
    AlternationPoset poset = build_poset(grid_types(grid));
    CHECK(poset_levels(poset) == std::vector<int>{1, 8, 8, 8});
  }
  {
    RootSystem g2(Family::G2, 2);
    AlternationGrid grid = alternation_grid(g2, Weight::fw({0, 0}), 30);
    AlternationPoset poset = build_poset(grid_types(grid));
    CHECK(poset_levels(poset) == std::vector<int>{1, 12, 12, 12, 12, 12});
  }
}

TEST_CASE("cover edges generate exactly the containment order") {
  RootSystem b2(Family::B, 2);
  AlternationGrid grid = alternation_grid(b2, Weight::fw({0, 0}), 20);
  AlternationPoset poset = build_poset(grid_types(grid));
  const int n = static_cast<int>(poset.nodes.size());

  // reachability through cover edges
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (auto [a, b] : poset.cover_edges) reach[a][b] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;

  std::vector<WordSet> sorted_nodes = poset.nodes;
  for (auto& s : sorted_nodes) std::sort(s.begin(), s.end());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool contained = i != j && subset_of(sorted_nodes[i], sorted_nodes[j]);
      CHECK(reach[i][j] == contained);
    }

  // covers are irredundant: no edge is implied by two others
  for (auto [a, b] : poset.cover_edges) {
    bool implied = false;
    for (int k = 0; k < n; ++k)
      if (k != a && k != b && reach[a][k] && reach[k][b]) implied = true;
    CHECK_FALSE(implied);
  }
}

TEST_CASE("build_poset deduplicates") {
  WordSet s1 = {{}, {1}};
  WordSet s2 = {{}};
  AlternationPoset poset = build_poset({s1, s2, s1, {}});
  CHECK(poset.nodes.size() == 3);
  CHECK(poset_levels(poset) == std::vector<int>{1, 1, 1});
  CHECK(poset.cover_edges.size() == 2);
}

TEST_CASE("renderers") {
  RootSystem a2(Family::A, 2);
  AlternationGrid grid = alternation_grid(a2, Weight::fw({0, 0}), 5);
  std::string csv = render(grid, "csv");
  CHECK(csv.rfind("m,n,set_id,set", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 122);  // header + 11*11 cells
  CHECK(csv.find("-5,-5,") != std::string::npos);
  std::string svg = render(grid, "svg");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(render(grid, "csv") == csv);  // deterministic

  AlternationPoset poset = build_poset(grid_types(grid));
  std::string dot = render(poset, "dot");
  CHECK(dot.rfind("digraph", 0) == 0);
  std::string pcsv = render(poset, "csv");
  CHECK(pcsv.rfind("sub_id,super_id,sub,super", 0) == 0);

  CHECK_THROWS_AS(render(grid, "dot"), std::invalid_argument);
  CHECK_THROWS_AS(render(poset, "svg"), std::invalid_argument);
}

TEST_CASE("word set strings") {
  CHECK(word_set_string({}) == "{}");
  CHECK(word_set_string({{}}) == "{1}");
  CHECK(word_set_string({{}, {2}, {2, 3}}) == "{1, s2, s2s3}");
}
