#pragma once

#include <string>
#include <utility>
#include <vector>

#include "xcover/bigraph.hpp"
#include "xcover/cover.hpp"
#include "xcover/cycles.hpp"
#include "xcover/deficiency.hpp"

namespace xcover {

// Diagnostic record filled in when a trace sink is passed to solve_maxdeg3:
// one line per processed cycle (its class, designated vertex, attachment
// edge, rescheduling events) plus the auxiliary forest that the recursion
// bottomed out on, with a per-vertex origin note (original vertex or the
// cycle a synthetic vertex stands in for).
struct Maxdeg3Trace {
  std::vector<std::string> lines;
  BiGraph aux_forest;
  std::vector<std::string> aux_origin_x, aux_origin_y;
};

// Minimum path X-cover with a matching deficiency certificate for graphs of
// maximum degree 3. Drives an optimal cycle packing, classifies the packed
// cycles, reduces to the forest solver on an auxiliary forest, and stitches
// the cycles back into the returned paths. Throws errc::precondition when a
// vertex of degree >= 4 exists and errc::cap when the graph is too large for
// the exact packing search.
std::pair<PathXCover, DeficiencyCertificate> solve_maxdeg3(const BiGraph& g,
                                                           Maxdeg3Trace* trace = nullptr);

}  // namespace xcover
