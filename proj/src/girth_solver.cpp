#include "xcover/girth_solver.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "xcover/generators.hpp"

namespace xcover {

namespace {

// ceil(e * 10^12); e = 2.718281828459045...
constexpr long long kE12 = 2718281828460LL;
constexpr long long kScale = 1000000000000LL;
constexpr double kEuler = 2.718281828459045;

}  // namespace

GirthCondition check_girth_condition(const BiGraph& g, int d) {
  if (d <= 0) fail(errc::argument, "degree bound must be positive");
  GirthCondition r;
  r.girth = girth(g);
  r.max_degree = max_degree(g);
  r.degree_bound = d;
  if (r.max_degree > d) {
    r.valid = false;
    return r;
  }
  if (!r.girth) {
    r.valid = true;  // acyclic: infinite girth
    return r;
  }
  // girth >= 4ed^2 + 1 is girth - 1 >= 4ed^2; both sides scaled by 10^12.
  __int128 lhs = static_cast<__int128>(*r.girth - 1) * kScale;
  __int128 rhs = static_cast<__int128>(4) * d * d * kE12;
  r.valid = lhs >= rhs;
  return r;
}

AuditReport dependency_audit(const BiGraph& g, const CyclePacking& packing) {
  if (!packing_valid_in(g, packing)) fail(errc::precondition, "packing is not valid in the graph");
  AuditReport rep;
  rep.d = max_degree(g);

  const int nc = static_cast<int>(packing.cycles.size());
  std::vector<int> cyc_of_x(g.x_count(), -1);
  for (int c = 0; c < nc; ++c)
    for (const VertexRef& v : packing.cycles[c].vertices())
      if (v.side == Side::X) cyc_of_x[v.index] = c;

  // Events: pairs of X vertices on distinct cycles with a common Y neighbor,
  // enumerated in lexicographic (u, v) order.
  std::vector<AuditEvent> evs;
  for (int u = 0; u < g.x_count(); ++u) {
    if (cyc_of_x[u] < 0) continue;
    for (int v = u + 1; v < g.x_count(); ++v) {
      if (cyc_of_x[v] < 0 || cyc_of_x[v] == cyc_of_x[u]) continue;
      bool common = false;
      for (int y : g.adj_x(u))
        if (g.has_edge(v, y)) {
          common = true;
          break;
        }
      if (!common) continue;
      AuditEvent e;
      e.u = u;
      e.v = v;
      e.cycle_u = cyc_of_x[u];
      e.cycle_v = cyc_of_x[v];
      long long l1 = packing.cycles[e.cycle_u].length() / 2;
      long long l2 = packing.cycles[e.cycle_v].length() / 2;
      e.pr_den = l1 * l2;
      e.x_value = kEuler / static_cast<double>(e.pr_den);
      e.type1_bound = l1 * rep.d * rep.d;
      e.type2_bound = l2 * rep.d * rep.d;
      evs.push_back(e);
    }
  }

  // Dependency (i, j): the four endpoint cycles are not all distinct. Type 1
  // touches C(u_i), type 2 touches C(v_i); a j touching both is counted in
  // both tallies but contributes one factor to the product.
  for (size_t i = 0; i < evs.size(); ++i) {
    AuditEvent& ei = evs[i];
    double prod = ei.x_value;
    for (size_t j = 0; j < evs.size(); ++j) {
      if (j == i) continue;
      const AuditEvent& ej = evs[j];
      bool t1 = ej.cycle_u == ei.cycle_u || ej.cycle_v == ei.cycle_u;
      bool t2 = ej.cycle_u == ei.cycle_v || ej.cycle_v == ei.cycle_v;
      if (!t1 && !t2) continue;
      if (t1) ++ei.type1_count;
      if (t2) ++ei.type2_count;
      prod *= 1.0 - ej.x_value;
    }
    ei.product_value = prod;
    ei.margin = prod - 1.0 / static_cast<double>(ei.pr_den);
    ei.holds = ei.margin >= -1e-9;
    rep.all_hold = rep.all_hold && ei.holds;
    rep.counts_within_bounds = rep.counts_within_bounds && ei.type1_count <= ei.type1_bound &&
                               ei.type2_count <= ei.type2_bound;
  }
  rep.events = std::move(evs);
  return rep;
}

std::pair<PathXCover, LambdaIndependentSet> solve_high_girth(const BiGraph& g, int d,
                                                             const CyclePacking& packing,
                                                             const HighGirthOptions& opts) {
  if (!opts.force) {
    GirthCondition cond = check_girth_condition(g, d);
    if (!cond.valid)
      fail(errc::precondition,
           cond.max_degree > d
               ? "maximum degree " + std::to_string(cond.max_degree) + " exceeds the bound " +
                     std::to_string(d)
               : "girth " + std::to_string(*cond.girth) + " is below the 4ed^2+1 threshold for d=" +
                     std::to_string(d));
  }
  if (!packing_valid_in(g, packing)) fail(errc::precondition, "packing is not valid in the graph");

  const int nc = static_cast<int>(packing.cycles.size());
  std::vector<int> cyc_of_x(g.x_count(), -1);
  for (int c = 0; c < nc; ++c)
    for (const VertexRef& v : packing.cycles[c].vertices())
      if (v.side == Side::X) cyc_of_x[v.index] = c;
  for (int i = 0; i < g.x_count(); ++i)
    if (cyc_of_x[i] < 0)
      fail(errc::precondition, "packing does not cover " + to_string(xref(i)));

  std::vector<std::vector<int>> xs(nc);
  for (int c = 0; c < nc; ++c) xs[c] = packing.cycles[c].x_indices();

  std::mt19937_64 rng(opts.seed);
  auto draw = [&](int c) { return xs[c][uniform_below(rng, xs[c].size())]; };
  std::vector<int> choice(nc);
  for (int c = 0; c < nc; ++c) choice[c] = draw(c);

  // The lowest conflicted pair in (u, v) order among the chosen vertices, or
  // nullopt. Chosen vertices sit on distinct cycles, so a common Y neighbor
  // is exactly a violated event.
  std::vector<int> chosen_sorted(nc);
  auto lowest_conflict = [&]() -> std::optional<std::pair<int, int>> {
    for (int c = 0; c < nc; ++c) chosen_sorted[c] = choice[c];
    std::sort(chosen_sorted.begin(), chosen_sorted.end());
    for (int a = 0; a < nc; ++a)
      for (int b = a + 1; b < nc; ++b) {
        int u = chosen_sorted[a], v = chosen_sorted[b];
        for (int y : g.adj_x(u))
          if (g.has_edge(v, y)) return std::make_pair(u, v);
      }
    return std::nullopt;
  };

  long long budget = opts.max_resamples >= 0 ? opts.max_resamples : 1000LL * nc;
  long long rounds = 0;
  std::optional<std::pair<int, int>> conflict;
  while ((conflict = lowest_conflict())) {
    if (rounds >= budget) {
      std::string msg = "resampling did not converge after " + std::to_string(rounds) +
                        " rounds; residual conflicts:";
      for (int a = 0; a < nc; ++a)
        for (int b = a + 1; b < nc; ++b) {
          int u = chosen_sorted[a], v = chosen_sorted[b];
          for (int y : g.adj_x(u))
            if (g.has_edge(v, y)) {
              msg += " (" + to_string(xref(u)) + "," + to_string(xref(v)) + ")";
              break;
            }
        }
      fail(errc::nontermination, msg);
    }
    int cu = cyc_of_x[conflict->first], cv = cyc_of_x[conflict->second];
    choice[cu] = draw(cu);
    choice[cv] = draw(cv);
    ++rounds;
  }

  PathXCover cover;
  for (int c = 0; c < nc; ++c) {
    const Cycle& cy = packing.cycles[c];
    VertexRef y_succ = cy.successor(xref(choice[c]));
    cover.paths.push_back(cy.to_path_deleting_vertex(y_succ));
  }
  LambdaIndependentSet witness;
  witness.subset = choice;
  std::sort(witness.subset.begin(), witness.subset.end());

  XCOVER_ASSERT(lambda_set(g, witness.subset).empty(), "witness is not Lambda-independent");
  XCOVER_ASSERT(cover.paths.size() == witness.subset.size(),
                "path and witness counts disagree");
  Verdict v = verify_cover(g, cover);
  XCOVER_ASSERT(v.valid, "per-cycle paths fail cover verification: " +
                             (v.violations.empty() ? std::string("unknown") : v.violations[0]));
  return {std::move(cover), std::move(witness)};
}

}  // namespace xcover
