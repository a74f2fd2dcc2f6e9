#pragma once

#include "kostant/rootsys.hpp"

#include <string>

namespace kostant {

/// Parses "3w1+2w2", "[3,2]", or "0" into an FW-coordinate weight of the
/// given rank. Terms may appear in any order and repeat ("w2+3w1" is fine;
/// a bare "w3" means 1w3). Throws std::invalid_argument on bad input.
Weight parse_weight_spec(const std::string& spec, int rank);

}  // namespace kostant
