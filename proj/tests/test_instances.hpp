#pragma once

// Shared fixtures and brute-force oracles for the test binaries. The oracles
// are deliberately independent of the library code paths they check: plain
// subset enumeration and backtracking over explicit vertex sequences.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "xcover/bigraph.hpp"
#include "xcover/generators.hpp"
#include "xcover/hypergraph.hpp"

namespace xcover::testing {

inline BiGraph p3() { return BiGraph::build(2, 1, {{0, 0}, {1, 0}}); }

inline BiGraph star3() { return BiGraph::build(3, 1, {{0, 0}, {1, 0}, {2, 0}}); }

// Path on 5 vertices x1-y1-x*-y2-x2, indexed x0-y0-x1-y1-x2.
inline BiGraph caterpillar() {
  return BiGraph::build(3, 2, {{0, 0}, {1, 0}, {1, 1}, {2, 1}});
}

inline BiGraph k23() {
  return BiGraph::build(2, 3, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}});
}

inline BiGraph k33() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e.emplace_back(i, j);
  return BiGraph::build(3, 3, e);
}

// 3-cube: X = even-weight triples 000,011,101,110; Y = odd 001,010,100,111.
inline BiGraph q3() {
  std::vector<int> xs{0, 3, 5, 6}, ys{1, 2, 4, 7};
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int d = xs[i] ^ ys[j];
      if (d == 1 || d == 2 || d == 4) e.emplace_back(i, j);
    }
  return BiGraph::build(4, 4, e);
}

inline BiGraph c6() { return gen_cycle(6); }
inline BiGraph c50() { return gen_cycle(50); }

inline BiGraph c6_pendant() {
  auto e = c6().edge_list();
  e.emplace_back(3, 0);
  return BiGraph::build(4, 3, e);
}

// 4-cycle x0-y0-x2-y1 with pendants x1-y0 and x3-y1: the smallest instance
// where the designated vertex must leave the certificate subset.
inline BiGraph pinch6() {
  return BiGraph::build(4, 2, {{0, 0}, {0, 1}, {2, 0}, {2, 1}, {1, 0}, {3, 1}});
}

// 4-cycle x0-y0-x1-y1 plus x2 adjacent to both Y vertices.
inline BiGraph theta5() {
  return BiGraph::build(3, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}});
}

// Two 50-cycles sharing no vertex, bridged by one Y vertex adjacent to one X
// vertex of each: two cycles whose chosen vertices can share a neighbor.
inline BiGraph two_c50_bridged() {
  std::vector<std::pair<int, int>> e;
  for (int c = 0; c < 2; ++c)
    for (int i = 0; i < 25; ++i) {
      e.emplace_back(25 * c + i, 25 * c + i);
      e.emplace_back(25 * c + i, 25 * c + (i + 24) % 25);
    }
  e.emplace_back(0, 50);
  e.emplace_back(25, 50);
  return BiGraph::build(50, 51, e);
}

inline Hypergraph fano() {
  return Hypergraph::build(7, {{0, 1, 2},
                               {0, 3, 4},
                               {0, 5, 6},
                               {1, 3, 5},
                               {1, 4, 6},
                               {2, 3, 6},
                               {2, 4, 5}});
}

// ---- brute-force oracles ----

inline std::vector<int> naive_lambda(const BiGraph& g, const std::vector<int>& s) {
  std::vector<int> out;
  for (int j = 0; j < g.y_count(); ++j) {
    int hits = 0;
    for (int i : s)
      if (g.has_edge(i, j)) ++hits;
    if (hits >= 2) out.push_back(j);
  }
  return out;
}

inline int naive_deficiency(const BiGraph& g, const std::vector<int>& s) {
  return static_cast<int>(s.size()) - static_cast<int>(naive_lambda(g, s).size());
}

// Maximum of |S| - |Lambda(S)| over every subset of X, by enumeration.
inline int naive_max_deficiency(const BiGraph& g) {
  int best = 0;
  for (uint32_t m = 0; m < (1u << g.x_count()); ++m) {
    std::vector<int> s;
    for (int i = 0; i < g.x_count(); ++i)
      if (m >> i & 1) s.push_back(i);
    best = std::max(best, naive_deficiency(g, s));
  }
  return best;
}

inline int naive_alpha(const BiGraph& g) {
  int best = 0;
  for (uint32_t m = 0; m < (1u << g.x_count()); ++m) {
    std::vector<int> s;
    for (int i = 0; i < g.x_count(); ++i)
      if (m >> i & 1) s.push_back(i);
    if (naive_lambda(g, s).empty()) best = std::max(best, static_cast<int>(s.size()));
  }
  return best;
}

// Every simple path of g as a vertex sequence, each reported once (the lower
// endpoint first). Includes single vertices of both sides.
inline std::vector<std::vector<VertexRef>> naive_all_paths(const BiGraph& g) {
  std::vector<std::vector<VertexRef>> out;
  std::vector<VertexRef> cur;
  std::set<VertexRef> used;
  std::function<void()> grow = [&] {
    if (cur.front() <= cur.back()) out.push_back(cur);
    for (VertexRef w : g.neighbors(cur.back())) {
      if (used.count(w)) continue;
      used.insert(w);
      cur.push_back(w);
      grow();
      cur.pop_back();
      used.erase(w);
    }
  };
  for (int i = 0; i < g.x_count(); ++i) {
    cur = {xref(i)};
    used = {xref(i)};
    grow();
  }
  for (int j = 0; j < g.y_count(); ++j) {
    cur = {yref(j)};
    used = {yref(j)};
    grow();
  }
  return out;
}

// Exact minimum path X-cover size by branching over all simple paths through
// the lowest uncovered X vertex. Exponential; keep the inputs tiny.
inline int naive_min_cover(const BiGraph& g) {
  struct Mask {
    uint32_t x = 0, y = 0;
  };
  std::vector<Mask> paths;
  for (const auto& p : naive_all_paths(g)) {
    Mask m;
    for (VertexRef v : p)
      (v.side == Side::X ? m.x : m.y) |= 1u << v.index;
    if (m.x) paths.push_back(m);
  }
  std::map<std::pair<uint32_t, uint32_t>, int> memo;
  uint32_t full = g.x_count() == 32 ? ~0u : (1u << g.x_count()) - 1;
  std::function<int(uint32_t, uint32_t)> go = [&](uint32_t xm, uint32_t ym) -> int {
    if (xm == full) return 0;
    auto key = std::make_pair(xm, ym);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int lowest = 0;
    while (xm >> lowest & 1) ++lowest;
    int best = 1 << 20;
    for (const Mask& m : paths)
      if ((m.x >> lowest & 1) && !(m.x & xm) && !(m.y & ym))
        best = std::min(best, 1 + go(xm | m.x, ym | m.y));
    memo[key] = best;
    return best;
  };
  return go(0, 0);
}

// Every cycle as a vertex sequence, rooted at its lowest X vertex, reported
// once; `go` walks Y->X->... keeping X indices above the root.
inline std::vector<std::vector<VertexRef>> naive_all_cycles(const BiGraph& g) {
  std::vector<std::vector<VertexRef>> out;
  std::vector<VertexRef> cur;
  std::set<VertexRef> used;
  std::function<void(int)> go = [&](int root) {
    VertexRef back = cur.back();
    for (VertexRef w : g.neighbors(back)) {
      if (w.side == Side::X && w.index == root && cur.size() >= 4) {
        if (cur[1] < cur.back()) out.push_back(cur);
        continue;
      }
      if (w.side == Side::X && w.index <= root) continue;
      if (used.count(w)) continue;
      used.insert(w);
      cur.push_back(w);
      go(root);
      cur.pop_back();
      used.erase(w);
    }
  };
  for (int i = 0; i < g.x_count(); ++i) {
    cur = {xref(i)};
    used = {xref(i)};
    go(i);
  }
  return out;
}

inline std::optional<int> naive_girth(const BiGraph& g) {
  std::optional<int> best;
  for (const auto& c : naive_all_cycles(g))
    if (!best || static_cast<int>(c.size()) < *best) best = static_cast<int>(c.size());
  return best;
}

// Most vertices coverable by disjoint cycles, and the fewest cycles doing so.
inline std::pair<int, int> naive_best_packing(const BiGraph& g) {
  struct Mask {
    uint64_t bits = 0;
    int size = 0;
  };
  std::vector<Mask> cyc;
  for (const auto& c : naive_all_cycles(g)) {
    Mask m;
    m.size = static_cast<int>(c.size());
    for (VertexRef v : c)
      m.bits |= uint64_t{1} << (v.side == Side::X ? v.index : g.x_count() + v.index);
    cyc.push_back(m);
  }
  int best_cov = 0, best_cnt = 0;
  std::function<void(size_t, uint64_t, int, int)> go = [&](size_t i, uint64_t used, int cov,
                                                           int cnt) {
    if (cov > best_cov || (cov == best_cov && cnt < best_cnt)) {
      best_cov = cov;
      best_cnt = cnt;
    }
    for (size_t k = i; k < cyc.size(); ++k)
      if (!(cyc[k].bits & used)) go(k + 1, used | cyc[k].bits, cov + cyc[k].size, cnt + 1);
  };
  go(0, 0, 0, 0);
  return {best_cov, best_cnt};
}

inline int naive_strong_independence(const Hypergraph& h) {
  int best = 0;
  for (uint32_t m = 0; m < (1u << h.vertex_count()); ++m) {
    bool ok = true;
    for (const auto& e : h.edges()) {
      int hits = 0;
      for (int v : e)
        if (m >> v & 1) ++hits;
      if (hits >= 2) ok = false;
    }
    if (ok) best = std::max(best, __builtin_popcount(m));
  }
  return best;
}

// ---- randomized instance makers ----

// Random bigraph with maximum degree 3: candidate edges shuffled, kept with a
// per-instance probability while both endpoints have room.
inline BiGraph random_maxdeg3(int nx, int ny, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> cand;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) cand.emplace_back(i, j);
  for (size_t i = cand.size(); i > 1; --i)
    std::swap(cand[i - 1], cand[uniform_below(rng, i)]);
  double p = 0.25 + 0.65 * uniform_unit(rng);
  std::vector<int> dx(nx, 0), dy(ny, 0);
  std::vector<std::pair<int, int>> edges;
  for (auto [i, j] : cand)
    if (dx[i] < 3 && dy[j] < 3 && uniform_unit(rng) < p) {
      ++dx[i];
      ++dy[j];
      edges.emplace_back(i, j);
    }
  return BiGraph::build(nx, ny, edges);
}

// ---- unlabeled tree enumeration ----

// Trees on up to n vertices as parent vectors (parent[0] = -1), one per
// isomorphism class, grown a leaf at a time and deduplicated by canonical
// form. Class counts for n = 1..10: 1 1 1 2 3 6 11 23 47 106.
inline std::vector<std::vector<int>> all_trees_up_to(int n) {
  using Tree = std::vector<int>;
  auto canon = [](const Tree& par) {
    int k = static_cast<int>(par.size());
    std::vector<std::vector<int>> adj(k);
    for (int v = 1; v < k; ++v) {
      adj[v].push_back(par[v]);
      adj[par[v]].push_back(v);
    }
    // Centers via repeated leaf stripping.
    std::vector<int> deg(k), order;
    for (int v = 0; v < k; ++v) deg[v] = static_cast<int>(adj[v].size());
    std::vector<int> layer;
    std::vector<char> gone(k, 0);
    for (int v = 0; v < k; ++v)
      if (deg[v] <= 1) layer.push_back(v);
    int left = k;
    while (left > 2) {
      std::vector<int> next;
      for (int v : layer) {
        gone[v] = 1;
        --left;
        for (int w : adj[v])
          if (!gone[w] && --deg[w] == 1) next.push_back(w);
      }
      layer = next;
    }
    std::function<std::string(int, int)> enc = [&](int v, int from) {
      std::vector<std::string> parts;
      for (int w : adj[v])
        if (w != from) parts.push_back(enc(w, v));
      std::sort(parts.begin(), parts.end());
      std::string s = "(";
      for (auto& q : parts) s += q;
      return s + ")";
    };
    std::string best;
    for (int c : layer) {
      std::string s = enc(c, -1);
      if (best.empty() || s < best) best = s;
    }
    return best;
  };

  std::vector<Tree> out{{-1}};
  std::vector<Tree> frontier{{-1}};
  for (int sz = 2; sz <= n; ++sz) {
    std::set<std::string> seen;
    std::vector<Tree> next;
    for (const Tree& t : frontier)
      for (int attach = 0; attach < static_cast<int>(t.size()); ++attach) {
        Tree grown = t;
        grown.push_back(attach);
        std::string c = canon(grown);
        if (seen.insert(c).second) next.push_back(grown);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = next;
  }
  return out;
}

// A tree (as a parent vector) read as a bigraph, the root's side chosen by
// the flag; vertices at even depth take the root's side.
inline std::optional<BiGraph> tree_as_bigraph(const std::vector<int>& par, bool root_in_x) {
  int k = static_cast<int>(par.size());
  std::vector<int> depth(k, 0);
  for (int v = 1; v < k; ++v) depth[v] = depth[par[v]] + 1;
  std::vector<int> id(k), nx_ids, ny_ids;
  int nx = 0, ny = 0;
  for (int v = 0; v < k; ++v) {
    bool in_x = (depth[v] % 2 == 0) == root_in_x;
    id[v] = in_x ? nx++ : ny++;
  }
  if (nx == 0) return std::nullopt;
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < k; ++v) {
    bool in_x = (depth[v] % 2 == 0) == root_in_x;
    edges.emplace_back(in_x ? id[v] : id[par[v]], in_x ? id[par[v]] : id[v]);
  }
  return BiGraph::build(nx, ny, edges);
}

}  // namespace xcover::testing
