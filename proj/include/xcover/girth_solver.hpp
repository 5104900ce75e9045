#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "xcover/bigraph.hpp"
#include "xcover/cover.hpp"
#include "xcover/cycles.hpp"
#include "xcover/deficiency.hpp"

namespace xcover {

// Outcome of testing girth(g) >= 4*e*d^2 + 1 with max_degree(g) <= d. The
// real constant is compared through a 12-digit rational over-approximation
// of e; girth is an integer, so the verdict is exact for every realistic d.
struct GirthCondition {
  bool valid = false;
  std::optional<int> girth;  // nullopt when acyclic (condition holds)
  int max_degree = 0;
  int degree_bound = 0;
};

GirthCondition check_girth_condition(const BiGraph& g, int d);

struct HighGirthOptions {
  uint64_t seed = 0;
  long long max_resamples = -1;  // negative: 1000 * #cycles
  bool force = false;            // skip the girth check; termination best-effort
};

// One event of the selection process: two X vertices on distinct packing
// cycles sharing a Y neighbor, with the quantities the product inequality
// is built from. Counts exclude the event itself.
struct AuditEvent {
  int u = 0, v = 0;              // X indices, u < v
  int cycle_u = 0, cycle_v = 0;  // packing indices
  long long pr_den = 1;          // Pr = 1 / pr_den = 1/(l1*l2)
  double x_value = 0.0;          // e / (l1*l2)
  int type1_count = 0, type2_count = 0;
  long long type1_bound = 0, type2_bound = 0;  // l1*d^2, l2*d^2
  double product_value = 0.0;                  // x_i * prod over dependents of (1-x_j)
  double margin = 0.0;                         // product_value - Pr
  bool holds = false;                          // margin >= -1e-9
};

struct AuditReport {
  int d = 0;  // max degree, used in the per-type bounds
  std::vector<AuditEvent> events;
  bool all_hold = true;
  bool counts_within_bounds = true;
};

// Enumerates the events and the dependency structure over a cycle packing
// and checks the product inequality for each event numerically.
AuditReport dependency_audit(const BiGraph& g, const CyclePacking& packing);

// Path X-cover of size <= alpha_Lambda(g) for a graph satisfying the girth
// condition, given a packing of disjoint cycles covering X. One X vertex per
// cycle is chosen at random; while two chosen vertices share a Y neighbor,
// the two cycles of the lowest such pair are redrawn. Each cycle then yields
// the path that skips the Y successor of its chosen vertex. Throws
// errc::precondition when the condition fails (unless forced) or the packing
// does not cover X, and errc::nontermination when the resampling budget runs
// out, listing the residual conflicts.
std::pair<PathXCover, LambdaIndependentSet> solve_high_girth(const BiGraph& g, int d,
                                                             const CyclePacking& packing,
                                                             const HighGirthOptions& opts = {});

}  // namespace xcover
