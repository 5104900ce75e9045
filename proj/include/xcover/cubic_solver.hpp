#pragma once

#include <string>
#include <utility>
#include <vector>

#include "xcover/bigraph.hpp"
#include "xcover/cover.hpp"
#include "xcover/deficiency.hpp"

namespace xcover {

// Path cover of a 3-regular bigraph with as many paths as the witness set
// has vertices; the witness is Lambda-independent, so the cover size is at
// most the Lambda-independence number. The paths cover every vertex of the
// graph, not just X. Pass a trace sink to record one line per merge step.
std::pair<PathXCover, LambdaIndependentSet> solve_cubic(const BiGraph& g,
                                                        std::vector<std::string>* trace = nullptr);

}  // namespace xcover
