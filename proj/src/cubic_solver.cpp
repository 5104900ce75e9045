#include "xcover/cubic_solver.hpp"

#include <algorithm>
#include <optional>

#include "xcover/cycles.hpp"

namespace xcover {

namespace {

struct Seed {
  int s;             // the chosen X vertex
  int cycle;         // index into the 2-factor
  VertexRef y1, y2;  // cycle successor and predecessor of s
  // Each port can host one external attachment: the seed's own third edge,
  // or the third edge of y1/y2. The side ports y1 and y2 are mutually
  // exclusive; Do-Something-Else scheduling guarantees that.
  bool used_s = false, used_y1 = false, used_y2 = false;
  VertexRef guest_s{}, guest_y1{}, guest_y2{};
  int sat_s = -1, sat_y1 = -1, sat_y2 = -1;
};

Path around_from(const Cycle& c, VertexRef v) { return cycle_path_from(c, v); }
Path around_to(const Cycle& c, VertexRef v) { return cycle_path_to(c, v); }

void append_path(Path& dst, const Path& src) {
  dst.vertices.insert(dst.vertices.end(), src.vertices.begin(), src.vertices.end());
}

}  // namespace

std::pair<PathXCover, LambdaIndependentSet> solve_cubic(const BiGraph& g,
                                                        std::vector<std::string>* trace) {
  if (is_regular(g) != std::optional<int>(3))
    fail(errc::precondition, "cubic solver needs a 3-regular graph");

  CyclePacking pk = two_factor(g);
  const int nc = static_cast<int>(pk.cycles.size());
  std::vector<int> cyc_of_x(g.x_count(), -1), cyc_of_y(g.y_count(), -1);
  for (int c = 0; c < nc; ++c)
    for (const VertexRef& v : pk.cycles[c].vertices())
      (v.side == Side::X ? cyc_of_x[v.index] : cyc_of_y[v.index]) = c;

  // Maximal Lambda-independent set with at most one vertex per cycle, grown
  // greedily in cycle order, lowest X index first. A vertex is addable iff
  // none of its neighbors already sees a chosen vertex.
  std::vector<int> hits(g.y_count(), 0);
  std::vector<int> seed_of_cycle(nc, -1);
  for (int c = 0; c < nc; ++c) {
    for (int x : pk.cycles[c].x_indices()) {
      bool ok = true;
      for (int y : g.adj_x(x))
        if (hits[y] >= 1) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (int y : g.adj_x(x)) ++hits[y];
      seed_of_cycle[c] = x;
      break;
    }
  }

  std::vector<Seed> seeds;
  for (int c = 0; c < nc; ++c) {
    if (seed_of_cycle[c] < 0) continue;
    const Cycle& cy = pk.cycles[c];
    VertexRef sv = xref(seed_of_cycle[c]);
    seeds.push_back(Seed{seed_of_cycle[c], c, cy.successor(sv), cy.predecessor(sv)});
  }
  std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) { return a.s < b.s; });

  std::vector<char> processed(nc, 0);
  int remaining = 0;
  for (int c = 0; c < nc; ++c) {
    processed[c] = seed_of_cycle[c] >= 0;
    if (!processed[c]) ++remaining;
  }

  std::optional<std::pair<int, int>> pending;  // (cycle, forbidden X vertex)
  while (remaining > 0) {
    int c, forbid = -1;
    if (pending) {
      std::tie(c, forbid) = *pending;
      pending.reset();
      XCOVER_ASSERT(!processed[c], "a scheduled cycle cannot already be merged");
    } else {
      c = 0;
      while (processed[c]) ++c;
    }
    const Cycle& cy = pk.cycles[c];
    int xc = -1;
    for (int x : cy.x_indices())
      if (x != forbid) {
        xc = x;
        break;
      }
    XCOVER_ASSERT(xc >= 0, "a cycle has at least two X vertices, one of them unforbidden");

    // Maximality of the seed set guarantees some seed shares a neighbor
    // with x(C); take the lowest seed, then prefer the common neighbor on
    // the seed's cycle, lowest index on ties.
    int si = -1, y_sel = -1;
    for (int i = 0; i < static_cast<int>(seeds.size()) && si < 0; ++i) {
      int on_seed = -1, on_c = -1;
      for (int y : g.adj_x(xc)) {
        if (!g.has_edge(seeds[i].s, y)) continue;
        XCOVER_ASSERT(cyc_of_y[y] == seeds[i].cycle || cyc_of_y[y] == c,
                      "a common neighbor lies on one of the two cycles (degree 3)");
        if (cyc_of_y[y] == seeds[i].cycle) {
          if (on_seed < 0) on_seed = y;
        } else if (on_c < 0) {
          on_c = y;
        }
      }
      if (on_seed >= 0 || on_c >= 0) {
        si = i;
        y_sel = on_seed >= 0 ? on_seed : on_c;
      }
    }
    XCOVER_ASSERT(si >= 0, "maximality of the seed set must yield a shared neighbor");
    Seed& sd = seeds[si];
    processed[c] = 1;  // before the scheduling check: an edge into this cycle no longer matters
    --remaining;

    std::string port_name;
    if (cyc_of_y[y_sel] == sd.cycle) {
      // The guest cycle reaches the seed cycle beside the seed: consume a
      // side port with edge x(C) - y_sel.
      VertexRef yv = yref(y_sel);
      XCOVER_ASSERT(yv == sd.y1 || yv == sd.y2,
                    "an attachment on the seed cycle lands next to the seed");
      bool to_y1 = yv == sd.y1;
      XCOVER_ASSERT(!(to_y1 ? sd.used_y1 : sd.used_y2), "side port consumed twice");
      XCOVER_ASSERT(!(to_y1 ? sd.used_y2 : sd.used_y1),
                    "both side ports of a seed consumed, breaking traceability");
      if (to_y1) {
        sd.used_y1 = true;
        sd.guest_y1 = xref(xc);
        sd.sat_y1 = c;
      } else {
        sd.used_y2 = true;
        sd.guest_y2 = xref(xc);
        sd.sat_y2 = c;
      }
      port_name = to_y1 ? "y1" : "y2";

      // If the other side port could still be reached from an unprocessed
      // cycle, that cycle is scheduled next with its entry vertex forbidden.
      VertexRef other = to_y1 ? sd.y2 : sd.y1;
      const Cycle& sc = pk.cycles[sd.cycle];
      VertexRef cn1 = sc.predecessor(other), cn2 = sc.successor(other);
      int w = -1;
      for (int x : g.adj_y(other.index))
        if (xref(x) != cn1 && xref(x) != cn2) w = x;
      if (w >= 0 && !processed[cyc_of_x[w]]) {
        XCOVER_ASSERT(!pending, "at most one scheduling directive can be armed");
        pending = {cyc_of_x[w], w};
        if (trace)
          trace->push_back("dse: forbid x" + std::to_string(w) + " on cycle " +
                           std::to_string(cyc_of_x[w]));
      }
    } else {
      XCOVER_ASSERT(!sd.used_s, "seed port consumed twice");
      sd.used_s = true;
      sd.guest_s = yref(y_sel);
      sd.sat_s = c;
      port_name = "s";
    }
    if (trace)
      trace->push_back("merge: cycle " + std::to_string(c) + " x(C)=x" + std::to_string(xc) +
                       " seed=x" + std::to_string(sd.s) + " y=y" + std::to_string(y_sel) +
                       " port=" + port_name);
  }

  // Extraction: each seed component is a star around its cycle with at most
  // two satellites; walk the long way around every cycle involved.
  PathXCover cover;
  for (const Seed& sd : seeds) {
    const Cycle& sc = pk.cycles[sd.cycle];
    VertexRef sv = xref(sd.s);
    Path p;
    if (sd.used_s && (sd.used_y1 || sd.used_y2)) {
      VertexRef yport = sd.used_y1 ? sd.y1 : sd.y2;
      VertexRef yguest = sd.used_y1 ? sd.guest_y1 : sd.guest_y2;
      int ysat = sd.used_y1 ? sd.sat_y1 : sd.sat_y2;
      p = around_to(pk.cycles[sd.sat_s], sd.guest_s);
      append_path(p, sc.to_path_breaking_edge(sv, yport));
      append_path(p, around_from(pk.cycles[ysat], yguest));
    } else if (sd.used_s) {
      p = around_to(sc, sv);
      append_path(p, around_from(pk.cycles[sd.sat_s], sd.guest_s));
    } else if (sd.used_y1 || sd.used_y2) {
      VertexRef yport = sd.used_y1 ? sd.y1 : sd.y2;
      VertexRef yguest = sd.used_y1 ? sd.guest_y1 : sd.guest_y2;
      int ysat = sd.used_y1 ? sd.sat_y1 : sd.sat_y2;
      p = around_to(sc, yport);
      append_path(p, around_from(pk.cycles[ysat], yguest));
    } else {
      p = around_from(sc, sv);
    }
    cover.paths.push_back(std::move(p));
  }

  int covered = 0;
  for (const Path& p : cover.paths) covered += static_cast<int>(p.vertices.size());
  XCOVER_ASSERT(covered == g.vertex_count(), "the cover must use every vertex exactly once");
  Verdict v = verify_cover(g, cover);
  XCOVER_ASSERT(v.valid, v.violations.empty() ? "cover verification failed" : v.violations.front());

  LambdaIndependentSet witness;
  for (const Seed& sd : seeds) witness.subset.push_back(sd.s);
  XCOVER_ASSERT(lambda_set(g, witness.subset).empty(), "the witness must be Lambda-independent");
  XCOVER_ASSERT(witness.subset.size() == cover.paths.size(),
                "one path per witness vertex by construction");
  return {std::move(cover), std::move(witness)};
}

}  // namespace xcover
