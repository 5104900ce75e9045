#pragma once

#include <utility>

#include "xcover/bigraph.hpp"
#include "xcover/cover.hpp"
#include "xcover/deficiency.hpp"

namespace xcover {

// Constructs a path X-cover of an acyclic bigraph together with a subset
// S certifying |cover| <= def(g, S). Precondition: g has no cycles.
std::pair<PathXCover, DeficiencyCertificate> solve_forest(const BiGraph& g);

}  // namespace xcover
