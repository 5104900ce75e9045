#include "xcover/maxdeg3_solver.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xcover/forest_solver.hpp"

namespace xcover {

namespace {

enum class CycleClass : uint8_t { Unprocessed, Good, Bad, Ugly };

// An ugly cycle hanging off a processed cycle: the attachment edge runs
// host-guest with host on the processed cycle (its designated vertex or one
// of the two Y ports next to it) and guest on the ugly cycle.
struct Attachment {
  int ugly_cycle = -1;
  VertexRef host{}, guest{};
};

struct CycleInfo {
  CycleClass cls = CycleClass::Unprocessed;
  int xc = -1;       // designated X vertex
  int y_plus = -1;   // cycle successor of xc
  int y_minus = -1;  // cycle predecessor of xc
  std::vector<Attachment> attached;
};

void append_path(Path& dst, const Path& src) {
  dst.vertices.insert(dst.vertices.end(), src.vertices.begin(), src.vertices.end());
}

void prepend_path(Path& dst, const Path& src) {
  dst.vertices.insert(dst.vertices.begin(), src.vertices.begin(), src.vertices.end());
}

const char* class_name(CycleClass c) {
  switch (c) {
    case CycleClass::Good: return "good";
    case CycleClass::Bad: return "bad";
    case CycleClass::Ugly: return "ugly";
    default: return "unprocessed";
  }
}

}  // namespace

std::pair<PathXCover, DeficiencyCertificate> solve_maxdeg3(const BiGraph& g, Maxdeg3Trace* trace) {
  if (int d = max_degree(g); d > 3)
    fail(errc::precondition,
         "solver needs maximum degree 3, found a vertex of degree " + std::to_string(d));

  auto emit = [&](const std::string& line) {
    if (trace) trace->lines.push_back(line);
  };

  PackingResult packed = optimal_cycle_packing(g);
  XCOVER_ASSERT(packed.certified, "cycle packing is not certified optimal");
  const std::vector<Cycle>& cyc = packed.packing.cycles;
  const int nc = static_cast<int>(cyc.size());

  // Cycle membership per vertex; -1 marks the leftover forest F.
  std::vector<int> cyc_of_x(g.x_count(), -1), cyc_of_y(g.y_count(), -1);
  for (int c = 0; c < nc; ++c)
    for (const VertexRef& v : cyc[c].vertices())
      (v.side == Side::X ? cyc_of_x[v.index] : cyc_of_y[v.index]) = c;

  // The unique neighbor of a cycle vertex outside its own cycle edges, or -1.
  // Degree <= 3 leaves room for exactly one such edge.
  auto outside_neighbor_of_y = [&](int y, int c) -> int {
    int a = cyc[c].predecessor(yref(y)).index, b = cyc[c].successor(yref(y)).index;
    int found = -1;
    for (int x : g.adj_y(y))
      if (x != a && x != b) {
        XCOVER_ASSERT(found < 0, "two edges leave y" + std::to_string(y) + " beside its cycle");
        found = x;
      }
    return found;
  };
  auto outside_neighbor_of_x = [&](int x, int c) -> int {
    int a = cyc[c].predecessor(xref(x)).index, b = cyc[c].successor(xref(x)).index;
    int found = -1;
    for (int y : g.adj_x(x))
      if (y != a && y != b) {
        XCOVER_ASSERT(found < 0, "two edges leave x" + std::to_string(x) + " beside its cycle");
        found = y;
      }
    return found;
  };

  // Processing phase: classify each cycle as good, bad, or ugly, in index
  // order except where a Do-Something-Else directive reschedules the cycle
  // holding vertex w to run next with w barred from the x(C) role. The
  // directive fires whenever the step just taken would otherwise let a later
  // cycle consume the second Y port of an already attached-to cycle, which
  // would make the stitching phase untraceable.
  std::vector<CycleInfo> info(nc);
  int pending_cycle = -1, pending_forbid = -1;
  int remaining = nc;
  while (remaining > 0) {
    int c = -1, forbid = -1;
    if (pending_cycle >= 0) {
      c = pending_cycle;
      forbid = pending_forbid;
      pending_cycle = pending_forbid = -1;
    } else {
      for (int i = 0; i < nc; ++i)
        if (info[i].cls == CycleClass::Unprocessed) {
          c = i;
          break;
        }
    }
    XCOVER_ASSERT(c >= 0 && info[c].cls == CycleClass::Unprocessed,
                  "rescheduling directive points at a processed cycle");
    CycleInfo& ic = info[c];
    for (int x : cyc[c].x_indices())
      if (x != forbid) {
        ic.xc = x;
        break;
      }
    XCOVER_ASSERT(ic.xc >= 0, "every X vertex of a rescheduled cycle is barred");
    ic.y_plus = cyc[c].successor(xref(ic.xc)).index;
    ic.y_minus = cyc[c].predecessor(xref(ic.xc)).index;

    // Arm a directive against vertex w; w's cycle runs next without w as its
    // designated vertex. Only unprocessed cycles matter: an edge into a
    // processed cycle can no longer become an attachment.
    auto arm = [&](int w) {
      int cw = w >= 0 ? cyc_of_x[w] : -1;
      if (cw < 0 || info[cw].cls != CycleClass::Unprocessed) return;
      XCOVER_ASSERT(pending_cycle < 0, "two rescheduling directives armed in one step");
      pending_cycle = cw;
      pending_forbid = w;
      emit("dse: forbid x" + std::to_string(w) + " on cycle " + std::to_string(cw));
    };

    // Attachment edge search, host cycles in index order, the four edge
    // shapes in a fixed order per host.
    std::optional<Attachment> att;
    int host_cycle = -1, dse_other_y = -1;
    for (int d = 0; d < nc && !att; ++d) {
      if (info[d].cls != CycleClass::Good && info[d].cls != CycleClass::Bad) continue;
      const CycleInfo& id = info[d];
      if (g.has_edge(ic.xc, id.y_plus)) {
        att = Attachment{c, yref(id.y_plus), xref(ic.xc)};
        dse_other_y = id.y_minus;
      } else if (g.has_edge(ic.xc, id.y_minus)) {
        att = Attachment{c, yref(id.y_minus), xref(ic.xc)};
        dse_other_y = id.y_plus;
      } else if (g.has_edge(id.xc, ic.y_plus)) {
        att = Attachment{c, xref(id.xc), yref(ic.y_plus)};
      } else if (g.has_edge(id.xc, ic.y_minus)) {
        att = Attachment{c, xref(id.xc), yref(ic.y_minus)};
      }
      if (att) host_cycle = d;
    }

    if (att) {
      ic.cls = CycleClass::Ugly;
      --remaining;
      for (const Attachment& prev : info[host_cycle].attached) {
        XCOVER_ASSERT(prev.host != att->host, "attachment port consumed twice");
        XCOVER_ASSERT(!(prev.host.side == Side::Y && att->host.side == Side::Y),
                      "both Y ports of a cycle attached to, rescheduling failed");
      }
      info[host_cycle].attached.push_back(*att);
      emit("cycle " + std::to_string(c) + ": ugly x=" + to_string(xref(ic.xc)) + " edge=" +
           to_string(att->guest) + "-" + to_string(att->host) + " host=" +
           std::to_string(host_cycle));
      if (dse_other_y >= 0) arm(outside_neighbor_of_y(dse_other_y, host_cycle));
      continue;
    }

    auto forest_neighbor_of_x = [&](int x) -> int {
      int y = outside_neighbor_of_x(x, c);
      return (y >= 0 && cyc_of_y[y] < 0) ? y : -1;
    };
    auto forest_neighbor_of_y = [&](int y) -> int {
      int x = outside_neighbor_of_y(y, c);
      return (x >= 0 && cyc_of_x[x] < 0) ? x : -1;
    };
    bool xc_f = forest_neighbor_of_x(ic.xc) >= 0;
    bool yp_f = forest_neighbor_of_y(ic.y_plus) >= 0;
    bool ym_f = forest_neighbor_of_y(ic.y_minus) >= 0;
    if (xc_f || yp_f || ym_f) {
      ic.cls = CycleClass::Bad;
      --remaining;
      emit("cycle " + std::to_string(c) + ": bad x=" + to_string(xref(ic.xc)));
      // A Y port tied to the forest cannot take an attachment, so protect the
      // opposite port when that port leads to an unprocessed cycle. Both
      // directions firing at once would need a fourth edge at one Y port;
      // ties go to the lower vertex index anyway.
      auto unprocessed_cycle_neighbor = [&](int y) -> int {
        int w = outside_neighbor_of_y(y, c);
        if (w < 0 || cyc_of_x[w] < 0) return -1;
        return info[cyc_of_x[w]].cls == CycleClass::Unprocessed ? w : -1;
      };
      int wp = yp_f ? unprocessed_cycle_neighbor(ic.y_minus) : -1;
      int wm = ym_f ? unprocessed_cycle_neighbor(ic.y_plus) : -1;
      if (wp >= 0 && wm >= 0)
        arm(std::min(wp, wm));
      else if (wp >= 0)
        arm(wp);
      else if (wm >= 0)
        arm(wm);
      continue;
    }

    ic.cls = CycleClass::Good;
    --remaining;
    emit("cycle " + std::to_string(c) + ": good x=" + to_string(xref(ic.xc)));
  }

  // Auxiliary forest: the leftover forest F, plus, for each bad cycle, its
  // designated vertex (with the edge toward F if it has one) and a synthetic
  // Y vertex standing in for the whole cycle, adjacent to the designated
  // vertex and to the forest neighbors of the two Y ports. Acyclicity is
  // forced by packing optimality; a cycle here means the packing missed one.
  std::vector<int> fx, fy;
  for (int i = 0; i < g.x_count(); ++i)
    if (cyc_of_x[i] < 0) fx.push_back(i);
  for (int j = 0; j < g.y_count(); ++j)
    if (cyc_of_y[j] < 0) fy.push_back(j);
  std::vector<int> x_fidx(g.x_count(), -1), y_fidx(g.y_count(), -1);
  for (int i = 0; i < static_cast<int>(fx.size()); ++i) x_fidx[fx[i]] = i;
  for (int j = 0; j < static_cast<int>(fy.size()); ++j) y_fidx[fy[j]] = j;

  std::vector<int> bad_cycles, good_cycles;
  for (int c = 0; c < nc; ++c) {
    if (info[c].cls == CycleClass::Bad) bad_cycles.push_back(c);
    if (info[c].cls == CycleClass::Good) good_cycles.push_back(c);
  }
  const int nb = static_cast<int>(bad_cycles.size());
  const int base_x = static_cast<int>(fx.size()), base_y = static_cast<int>(fy.size());

  std::vector<std::pair<int, int>> aux_edges;
  for (int i = 0; i < base_x; ++i)
    for (int y : g.adj_x(fx[i]))
      if (y_fidx[y] >= 0) aux_edges.emplace_back(i, y_fidx[y]);
  for (int b = 0; b < nb; ++b) {
    const CycleInfo& ic = info[bad_cycles[b]];
    int yf = outside_neighbor_of_x(ic.xc, bad_cycles[b]);
    if (yf >= 0 && cyc_of_y[yf] < 0) aux_edges.emplace_back(base_x + b, y_fidx[yf]);
    aux_edges.emplace_back(base_x + b, base_y + b);
    int xp = outside_neighbor_of_y(ic.y_plus, bad_cycles[b]);
    if (xp >= 0 && cyc_of_x[xp] < 0) aux_edges.emplace_back(x_fidx[xp], base_y + b);
    int xm = outside_neighbor_of_y(ic.y_minus, bad_cycles[b]);
    if (xm >= 0 && cyc_of_x[xm] < 0) aux_edges.emplace_back(x_fidx[xm], base_y + b);
  }
  BiGraph aux = BiGraph::build(base_x + nb, base_y + nb, aux_edges);
  XCOVER_ASSERT(!girth(aux).has_value(),
                "auxiliary graph contains a cycle, contradicting packing optimality");

  if (trace) {
    trace->aux_forest = aux;
    trace->aux_origin_x.clear();
    trace->aux_origin_y.clear();
    for (int i = 0; i < base_x; ++i) trace->aux_origin_x.push_back(to_string(xref(fx[i])));
    for (int b = 0; b < nb; ++b)
      trace->aux_origin_x.push_back("x(cycle " + std::to_string(bad_cycles[b]) + ")");
    for (int j = 0; j < base_y; ++j) trace->aux_origin_y.push_back(to_string(yref(fy[j])));
    for (int b = 0; b < nb; ++b)
      trace->aux_origin_y.push_back("y*(cycle " + std::to_string(bad_cycles[b]) + ")");
  }

  auto [aux_cover, aux_cert] = solve_forest(aux);
  XCOVER_ASSERT(static_cast<int>(aux_cover.paths.size()) <= aux_cert.value,
                "the forest solver cover must not exceed its certificate");

  // Read the forest certificate in g. Forest Y vertices keep their selected
  // neighborhoods exactly, but each synthetic vertex folds the two Y ports of
  // its bad cycle into one: select the designated vertex together with the
  // forest neighbors of both ports and g gains two joint neighbors where the
  // auxiliary forest gained one, costing the subset a unit of deficiency.
  // Dropping the designated vertex of each such cycle frees both ports and
  // refunds the unit. The ledger below accounts for every remaining source of
  // slack, so the host-side value can only sit above the forest value by the
  // two computed nonnegative terms, never below it.
  std::vector<int> s_prime;
  for (int idx : aux_cert.subset)
    s_prime.push_back(idx < base_x ? fx[idx] : info[bad_cycles[idx - base_x]].xc);
  std::sort(s_prime.begin(), s_prime.end());
  XCOVER_ASSERT(std::adjacent_find(s_prime.begin(), s_prime.end()) == s_prime.end(),
                "certificate subset maps to a repeated vertex");
  std::vector<char> in_sprime(g.x_count(), 0);
  for (int v : s_prime) in_sprime[v] = 1;

  // Forest neighbor of each bad cycle's Y ports, -1 when the port's outside
  // edge is missing or leads to another cycle.
  std::vector<int> port_p(nb, -1), port_m(nb, -1);
  for (int b = 0; b < nb; ++b) {
    const CycleInfo& ic = info[bad_cycles[b]];
    int xp = outside_neighbor_of_y(ic.y_plus, bad_cycles[b]);
    if (xp >= 0 && cyc_of_x[xp] < 0) port_p[b] = xp;
    int xm = outside_neighbor_of_y(ic.y_minus, bad_cycles[b]);
    if (xm >= 0 && cyc_of_x[xm] < 0) port_m[b] = xm;
  }

  int plus_slack = 0;
  std::vector<char> drop(g.x_count(), 0);
  for (int b = 0; b < nb; ++b) {
    const CycleInfo& ic = info[bad_cycles[b]];
    bool sp = port_p[b] >= 0 && in_sprime[port_p[b]];
    bool sm = port_m[b] >= 0 && in_sprime[port_m[b]];
    if (!sp || !sm) continue;
    if (in_sprime[ic.xc]) {
      drop[ic.xc] = 1;
      emit("cycle " + std::to_string(bad_cycles[b]) +
           ": dropping x=" + to_string(xref(ic.xc)) + " from the certificate subset");
    } else if (port_p[b] != port_m[b]) {
      ++plus_slack;
    }
  }
  std::vector<int> s_star;
  for (int v : s_prime)
    if (!drop[v]) s_star.push_back(v);
  std::vector<char> in_sstar(g.x_count(), 0);
  for (int v : s_star) in_sstar[v] = 1;

  // Cross-check the whole translation: forest Y vertices agree between the
  // two graphs, the cycle side of the host joint neighborhood is exactly the
  // ports predicted by the selected pairs, and the deficiency ledger
  // balances. plus_slack counts synthetic vertices whose two distinct port
  // neighbors are selected without the designated vertex; forest_losses
  // counts forest Y vertices that left the joint neighborhood with a dropped
  // designated vertex.
  auto forest_part = [&](const std::vector<int>& lam) {
    std::vector<int> out;
    for (int y : lam)
      if (cyc_of_y[y] < 0) out.push_back(y);
    return out;
  };
  std::vector<int> lam_prime = lambda_set(g, s_prime);
  std::vector<int> lam_star = lambda_set(g, s_star);
  std::vector<int> aux_forest_lambda;
  for (int j : lambda_set(aux, aux_cert.subset))
    if (j < base_y) aux_forest_lambda.push_back(fy[j]);
  XCOVER_ASSERT(aux_forest_lambda == forest_part(lam_prime),
                "forest Y vertices disagree about joint-neighborhood membership");
  std::vector<int> predicted_ports;
  for (int b = 0; b < nb; ++b) {
    const CycleInfo& ic = info[bad_cycles[b]];
    if (!in_sstar[ic.xc]) continue;
    if (port_p[b] >= 0 && in_sstar[port_p[b]]) predicted_ports.push_back(ic.y_plus);
    if (port_m[b] >= 0 && in_sstar[port_m[b]]) predicted_ports.push_back(ic.y_minus);
  }
  std::sort(predicted_ports.begin(), predicted_ports.end());
  std::vector<int> cycle_lambda;
  for (int y : lam_star)
    if (cyc_of_y[y] >= 0) cycle_lambda.push_back(y);
  XCOVER_ASSERT(cycle_lambda == predicted_ports,
                "cycle-side joint neighborhood deviates from the port analysis");
  int forest_losses = static_cast<int>(forest_part(lam_prime).size()) -
                      static_cast<int>(forest_part(lam_star).size());
  DeficiencyCertificate host_cert = deficiency_of(g, s_star);
  XCOVER_ASSERT(host_cert.value == aux_cert.value + plus_slack + forest_losses,
                "deficiency ledger between the auxiliary forest and the host graph is unbalanced");
  emit("certificate: forest value " + std::to_string(aux_cert.value) + ", host value " +
       std::to_string(host_cert.value) + " (+" + std::to_string(plus_slack) + " ports, +" +
       std::to_string(forest_losses) + " forest)");

  std::vector<int> s = s_star;
  for (int c : good_cycles) s.push_back(info[c].xc);
  std::sort(s.begin(), s.end());
  XCOVER_ASSERT(std::adjacent_find(s.begin(), s.end()) == s.end(),
                "a good cycle's designated vertex already sits in the certificate");
  DeficiencyCertificate cert = deficiency_of(g, s);
  XCOVER_ASSERT(cert.value == host_cert.value + static_cast<int>(good_cycles.size()),
                "good cycles fail to raise the deficiency one each");

  // Lift the forest paths back into g. Synthetic Y vertices have no original
  // counterpart yet; they carry an out-of-range index until their bad cycle
  // is stitched in.
  auto sentinel_of = [&](int b) { return yref(g.y_count() + b); };
  std::vector<Path> paths;
  for (const Path& p : aux_cover.paths) {
    Path q;
    for (const VertexRef& v : p.vertices) {
      if (v.side == Side::X)
        q.vertices.push_back(v.index < base_x ? xref(fx[v.index])
                                              : xref(info[bad_cycles[v.index - base_x]].xc));
      else
        q.vertices.push_back(v.index < base_y ? yref(fy[v.index]) : sentinel_of(v.index - base_y));
    }
    XCOVER_ASSERT(q.vertices.front().side == Side::X && q.vertices.back().side == Side::X,
                  "forest path does not end on the X side");
    paths.push_back(std::move(q));
  }
  const int forest_path_count = static_cast<int>(paths.size());

  // Good cycles become one path each, swallowing their attached ugly cycles.
  // The dropped cycle edge is always one incident to an attachment point (or
  // to the designated vertex when nothing is attached).
  for (int c : good_cycles) {
    const CycleInfo& ic = info[c];
    const auto& atts = ic.attached;
    XCOVER_ASSERT(atts.size() <= 2, "more than two attachments on one cycle");
    Path p;
    if (atts.empty()) {
      p = cycle_path_from(cyc[c], xref(ic.xc));
    } else if (atts.size() == 1) {
      p = cycle_path_to(cyc[c], atts[0].host);
      append_path(p, cycle_path_from(cyc[atts[0].ugly_cycle], atts[0].guest));
    } else {
      const Attachment& ax = atts[0].host.side == Side::X ? atts[0] : atts[1];
      const Attachment& ay = atts[0].host.side == Side::X ? atts[1] : atts[0];
      XCOVER_ASSERT(ax.host.side == Side::X && ay.host.side == Side::Y,
                    "two attachments on one side of a cycle");
      p = cycle_path_to(cyc[ax.ugly_cycle], ax.guest);
      append_path(p, cyc[c].to_path_breaking_edge(ax.host, ay.host));
      append_path(p, cycle_path_from(cyc[ay.ugly_cycle], ay.guest));
    }
    paths.push_back(std::move(p));
  }

  // Bad cycles get spliced into the lifted forest paths. The shape of the
  // splice is read off the path neighborhood of the synthetic vertex.
  for (int b = 0; b < nb; ++b) {
    const int c = bad_cycles[b];
    const CycleInfo& ic = info[c];
    const VertexRef sx = xref(ic.xc), syp = yref(ic.y_plus), sym = yref(ic.y_minus);
    const VertexRef sentinel = sentinel_of(b);

    const Attachment *att_x = nullptr, *att_y = nullptr;
    for (const Attachment& a : ic.attached) {
      XCOVER_ASSERT(a.host == sx || a.host == syp || a.host == sym,
                    "attachment host is not a port of its cycle");
      if (a.host.side == Side::X) {
        XCOVER_ASSERT(!att_x, "two attachments at the designated vertex");
        att_x = &a;
      } else {
        XCOVER_ASSERT(!att_y, "attachments at both Y ports of a bad cycle");
        att_y = &a;
      }
    }

    int spi = -1, spos = -1;
    for (int pi = 0; pi < static_cast<int>(paths.size()) && spi < 0; ++pi) {
      const auto& vs = paths[pi].vertices;
      for (int k = 0; k < static_cast<int>(vs.size()); ++k)
        if (vs[k] == sentinel) {
          spi = pi;
          spos = k;
          break;
        }
    }

    if (spi < 0) {
      // The synthetic vertex is uncovered, so the designated vertex ends its
      // path (it has at most one other neighbor in the auxiliary forest).
      // Walk around the cycle from there, steering toward an attached ugly
      // cycle's port when one exists.
      int pi = -1, pos = -1;
      for (int i = 0; i < static_cast<int>(paths.size()) && pi < 0; ++i) {
        const auto& vs = paths[i].vertices;
        for (int k = 0; k < static_cast<int>(vs.size()); ++k)
          if (vs[k] == sx) {
            pi = i;
            pos = k;
            break;
          }
      }
      XCOVER_ASSERT(pi >= 0, "designated vertex of a bad cycle missing from every path");
      Path& P = paths[pi];
      const int last = static_cast<int>(P.vertices.size()) - 1;
      XCOVER_ASSERT(pos == 0 || pos == last,
                    "designated vertex is interior while its synthetic vertex is uncovered");
      if (att_x)
        XCOVER_ASSERT(P.vertices.size() == 1,
                      "designated vertex with an attachment must sit on a one-vertex path");
      if (pos == 0) std::reverse(P.vertices.begin(), P.vertices.end());
      VertexRef end_y = att_y ? att_y->host : syp;
      Path seg = cyc[c].to_path_breaking_edge(sx, end_y);
      P.vertices.insert(P.vertices.end(), seg.vertices.begin() + 1, seg.vertices.end());
      if (att_y) append_path(P, cycle_path_from(cyc[att_y->ugly_cycle], att_y->guest));
      if (att_x) prepend_path(P, cycle_path_to(cyc[att_x->ugly_cycle], att_x->guest));
      continue;
    }

    Path& P = paths[spi];
    const int len = static_cast<int>(P.vertices.size());
    XCOVER_ASSERT(spos > 0 && spos + 1 < len, "synthetic vertex sits at a path endpoint");
    const VertexRef left = P.vertices[spos - 1], right = P.vertices[spos + 1];

    if (left == sx || right == sx) {
      // The path runs through the designated vertex into the synthetic one
      // and on into the forest: reroute it around the cycle, leaving through
      // the Y port adjacent to the forest-side neighbor. Neither Y port can
      // hold an attachment here (one is tied to the forest, the other was
      // protected by rescheduling).
      XCOVER_ASSERT(!att_y, "attachment at a Y port of a rerouted bad cycle");
      const VertexRef other = (left == sx) ? right : left;
      XCOVER_ASSERT(other.side == Side::X, "synthetic vertex lies between two Y vertices");
      bool adj_p = g.has_edge(other.index, ic.y_plus);
      bool adj_m = g.has_edge(other.index, ic.y_minus);
      XCOVER_ASSERT(adj_p || adj_m,
                    "forest neighbor of the synthetic vertex misses both Y ports");
      const VertexRef exit_y = adj_p ? syp : sym;
      Path seg = cyc[c].to_path_breaking_edge(sx, exit_y);
      if (left == sx) {
        P.vertices.erase(P.vertices.begin() + (spos - 1), P.vertices.begin() + (spos + 1));
        P.vertices.insert(P.vertices.begin() + (spos - 1), seg.vertices.begin(),
                          seg.vertices.end());
      } else {
        std::reverse(seg.vertices.begin(), seg.vertices.end());
        P.vertices.erase(P.vertices.begin() + spos, P.vertices.begin() + (spos + 2));
        P.vertices.insert(P.vertices.begin() + spos, seg.vertices.begin(), seg.vertices.end());
      }
      if (att_x) {
        XCOVER_ASSERT(P.vertices.front() == sx || P.vertices.back() == sx,
                      "designated vertex with an attachment is interior after rerouting");
        if (P.vertices.front() == sx)
          prepend_path(P, cycle_path_to(cyc[att_x->ugly_cycle], att_x->guest));
        else
          append_path(P, cycle_path_from(cyc[att_x->ugly_cycle], att_x->guest));
      }
      continue;
    }

    // The synthetic vertex joins the forest neighbors of the two Y ports:
    // replace it by the walk around the cycle that skips the designated
    // vertex, oriented to match its two path neighbors. Both Y ports are
    // tied to the forest, so no attachment can sit on either.
    XCOVER_ASSERT(left.side == Side::X && right.side == Side::X,
                  "synthetic vertex neighbors are not forest X vertices");
    XCOVER_ASSERT(!att_y, "attachment at a forest-tied Y port");
    Path seg = cyc[c].to_path_deleting_vertex(sx);
    bool left_p = g.has_edge(left.index, ic.y_plus);
    bool left_m = g.has_edge(left.index, ic.y_minus);
    XCOVER_ASSERT(left_p != left_m, "path neighbor fails to pin the splice orientation");
    if (left_m) std::reverse(seg.vertices.begin(), seg.vertices.end());
    XCOVER_ASSERT(g.has_edge(right.index, left_p ? ic.y_minus : ic.y_plus),
                  "far path neighbor misses the far Y port");
    P.vertices.erase(P.vertices.begin() + spos);
    P.vertices.insert(P.vertices.begin() + spos, seg.vertices.begin(), seg.vertices.end());

    if (att_x) {
      int pj = -1;
      for (int i = 0; i < static_cast<int>(paths.size()) && pj < 0; ++i)
        for (const VertexRef& v : paths[i].vertices)
          if (v == sx) {
            pj = i;
            break;
          }
      XCOVER_ASSERT(pj >= 0, "designated vertex of a bad cycle missing from every path");
      XCOVER_ASSERT(paths[pj].vertices.size() == 1,
                    "designated vertex with an attachment must sit on a one-vertex path");
      Path repl = cycle_path_to(cyc[att_x->ugly_cycle], att_x->guest);
      repl.vertices.push_back(sx);
      paths[pj] = std::move(repl);
    }
  }

  for (const Path& p : paths)
    for (const VertexRef& v : p.vertices)
      XCOVER_ASSERT(v.side == Side::X || v.index < g.y_count(),
                    "synthetic vertex survived the stitching phase");
  XCOVER_ASSERT(static_cast<int>(paths.size()) ==
                    forest_path_count + static_cast<int>(good_cycles.size()),
                "stitching changed the path count");

  PathXCover cover{std::move(paths)};
  Verdict v = certify(g, cover, cert);
  XCOVER_ASSERT(v.valid, "stitched cover fails certification: " +
                             (v.violations.empty() ? std::string("unknown") : v.violations[0]));
  return {std::move(cover), std::move(cert)};
}

}  // namespace xcover
