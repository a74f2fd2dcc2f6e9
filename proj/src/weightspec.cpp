#include "kostant/weightspec.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace kostant {

namespace {

long parse_long(const std::string& s) {
  std::size_t pos = 0;
  long v;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer '" + s + "' in weight spec");
  }
  if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "' in weight spec");
  return v;
}

}  // namespace

Weight parse_weight_spec(const std::string& spec, int rank) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty weight spec");

  IntVec coords(rank, 0);
  if (s == "0") return Weight::fw(coords);

  if (s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("unterminated '[' in weight spec");
    std::string body = s.substr(1, s.size() - 2);
    std::istringstream in(body);
    std::string item;
    int i = 0;
    while (std::getline(in, item, ',')) {
      if (i >= rank) throw std::invalid_argument("too many coordinates in weight spec");
      coords[i++] = parse_long(item);
    }
    if (i != rank) throw std::invalid_argument("expected " + std::to_string(rank) +
                                               " coordinates in weight spec");
    return Weight::fw(coords);
  }

  std::istringstream in(s);
  std::string term;
  while (std::getline(in, term, '+')) {
    std::size_t w = term.find('w');
    if (w == std::string::npos)
      throw std::invalid_argument("term '" + term + "' lacks a fundamental weight");
    long coeff = w == 0 ? 1 : parse_long(term.substr(0, w));
    long index = parse_long(term.substr(w + 1));
    if (index < 1 || index > rank)
      throw std::invalid_argument("fundamental weight index " + std::to_string(index) +
                                  " out of range for rank " + std::to_string(rank));
    coords[index - 1] += coeff;
  }
  return Weight::fw(coords);
}

}  // namespace kostant
