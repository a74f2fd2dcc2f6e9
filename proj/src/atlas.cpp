#include "kostant/atlas.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kostant {

std::string word_set_string(const WordSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ", ";
    out += WeylGroup::word_string(set[i]);
  }
  return out + "}";
}

namespace {

WordSet record_words(const AlternationRecord& rec) {
  WordSet words;
  words.reserve(rec.set.size());
  for (const TermRecord& t : rec.set) words.push_back(t.word);
  std::sort(words.begin(), words.end());
  return words;
}

}  // namespace

AlternationGrid alternation_grid(const RootSystem& rs, const Weight& mu, int bound, int threads) {
  if (rs.rank() != 2) throw std::invalid_argument("alternation grids need a rank-2 system");
  if (bound < 1) throw std::invalid_argument("bound must be positive");
  AlternationGrid grid;
  grid.family = rs.family();
  grid.bound = bound;
  grid.mu = mu;
  const int n = 2 * bound + 1;
  std::vector<WordSet> computed(static_cast<std::size_t>(n) * n);

  // one evaluator per worker so partition memo tables persist across cells
  int nworkers = 1;
#ifdef _OPENMP
  nworkers = threads > 0 ? threads : omp_get_max_threads();
#endif
  std::vector<std::unique_ptr<KostantEvaluator>> workers(static_cast<std::size_t>(nworkers));
  for (auto& w : workers) w = std::make_unique<KostantEvaluator>(rs, 1);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nworkers)
#endif
  for (int idx = 0; idx < n * n; ++idx) {
    int worker = 0;
#ifdef _OPENMP
    worker = omp_get_thread_num();
#endif
    Weight lambda = Weight::fw({idx / n - bound, idx % n - bound});
    computed[idx] = record_words(workers[worker]->alternation_record(lambda, mu));
  }

  grid.cells.assign(n, std::vector<int>(n, 0));
  grid.palette.push_back({});  // id 0: empty set
  std::map<WordSet, int> ids;
  for (int m = 0; m < n; ++m)
    for (int c = 0; c < n; ++c) {
      WordSet& words = computed[static_cast<std::size_t>(m) * n + c];
      if (words.empty()) {
        grid.has_empty = true;
        grid.cells[m][c] = 0;
        continue;
      }
      auto it = ids.find(words);
      if (it == ids.end()) {
        int id = static_cast<int>(grid.palette.size());
        grid.palette.push_back(words);
        it = ids.emplace(std::move(words), id).first;
      }
      grid.cells[m][c] = it->second;
    }
  return grid;
}

int distinct_types(const AlternationGrid& grid) {
  return static_cast<int>(grid.palette.size()) - 1 + (grid.has_empty ? 1 : 0);
}

AlternationPoset build_poset(std::vector<WordSet> sets) {
  for (WordSet& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end(), [](const WordSet& a, const WordSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  AlternationPoset poset;
  poset.nodes = std::move(sets);
  const int n = static_cast<int>(poset.nodes.size());
  auto contains = [&](int sup, int sub) {
    return std::includes(poset.nodes[sup].begin(), poset.nodes[sup].end(),
                         poset.nodes[sub].begin(), poset.nodes[sub].end());
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || poset.nodes[a].size() >= poset.nodes[b].size()) continue;
      if (!contains(b, a)) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c) {
        if (c == a || c == b) continue;
        if (poset.nodes[c].size() <= poset.nodes[a].size() ||
            poset.nodes[c].size() >= poset.nodes[b].size())
          continue;
        if (contains(c, a) && contains(b, c)) cover = false;
      }
      if (cover) poset.cover_edges.emplace_back(a, b);
    }
  std::sort(poset.cover_edges.begin(), poset.cover_edges.end());
  return poset;
}

std::vector<int> poset_levels(const AlternationPoset& poset) {
  std::size_t maxcard = 0;
  for (const WordSet& s : poset.nodes) maxcard = std::max(maxcard, s.size());
  std::vector<int> levels(maxcard + 1, 0);
  for (const WordSet& s : poset.nodes) ++levels[s.size()];
  return levels;
}

namespace {

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::string color_for(int id, int palette_size) {
  if (id == 0) return "#ffffff";
  // evenly spaced hues, varied lightness so adjacent ids differ clearly
  int hue = (id - 1) * 360 / std::max(palette_size - 1, 1);
  int light = 42 + 18 * (id % 3);
  std::ostringstream out;
  out << "hsl(" << hue << ",78%," << light << "%)";
  return out.str();
}

std::string grid_csv(const AlternationGrid& grid) {
  std::ostringstream out;
  out << "m,n,set_id,set\n";
  for (std::size_t m = 0; m < grid.cells.size(); ++m)
    for (std::size_t n = 0; n < grid.cells[m].size(); ++n) {
      int id = grid.cells[m][n];
      out << (static_cast<long>(m) - grid.bound) << "," << (static_cast<long>(n) - grid.bound)
          << "," << id << ","
          << csv_quote(word_set_string(grid.palette[static_cast<std::size_t>(id)])) << "\n";
    }
  return out.str();
}

std::string grid_svg(const AlternationGrid& grid) {
  const int cell = 16;
  const int n = 2 * grid.bound + 1;
  const int legend_row = 18;
  const int width = std::max(n * cell, 420);
  const int height = n * cell + 24 + static_cast<int>(grid.palette.size()) * legend_row;
  const int psize = static_cast<int>(grid.palette.size());
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\">\n";
  // cells: m rightward, n upward
  for (int m = 0; m < n; ++m)
    for (int c = 0; c < n; ++c) {
      int id = grid.cells[m][c];
      out << "<rect x=\"" << m * cell << "\" y=\"" << (n - 1 - c) * cell << "\" width=\"" << cell
          << "\" height=\"" << cell << "\" fill=\"" << color_for(id, psize)
          << "\" stroke=\"#cccccc\"/>\n";
    }
  int y = n * cell + 16;
  out << "<text x=\"0\" y=\"" << y << "\" font-size=\"12\">set id legend</text>\n";
  for (int id = 0; id < psize; ++id) {
    y += legend_row;
    out << "<rect x=\"0\" y=\"" << y - 12 << "\" width=\"12\" height=\"12\" fill=\""
        << color_for(id, psize) << "\" stroke=\"#888888\"/>\n";
    out << "<text x=\"18\" y=\"" << y - 2 << "\" font-size=\"11\">" << id << ": "
        << word_set_string(grid.palette[static_cast<std::size_t>(id)]) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string poset_dot(const AlternationPoset& poset) {
  std::ostringstream out;
  out << "digraph alternation_poset {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < poset.nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << word_set_string(poset.nodes[i]) << "\"];\n";
  for (const auto& [a, b] : poset.cover_edges) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string poset_csv(const AlternationPoset& poset) {
  std::ostringstream out;
  out << "sub_id,super_id,sub,super\n";
  for (const auto& [a, b] : poset.cover_edges)
    out << a << "," << b << ","
        << csv_quote(word_set_string(poset.nodes[static_cast<std::size_t>(a)])) << ","
        << csv_quote(word_set_string(poset.nodes[static_cast<std::size_t>(b)])) << "\n";
  return out.str();
}

}  // namespace

std::string render(const AlternationGrid& grid, const std::string& format) {
  if (format == "csv") return grid_csv(grid);
  if (format == "svg") return grid_svg(grid);
  throw std::invalid_argument("grids render to csv or svg, not " + format);
}

std::string render(const AlternationPoset& poset, const std::string& format) {
  if (format == "dot") return poset_dot(poset);
  if (format == "csv") return poset_csv(poset);
  throw std::invalid_argument("posets render to dot or csv, not " + format);
}

}  // namespace kostant
