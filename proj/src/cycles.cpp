#include "xcover/cycles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <utility>

namespace xcover {

namespace {

int uid_of(const BiGraph& g, VertexRef v) {
  return v.side == Side::X ? v.index : g.x_count() + v.index;
}

VertexRef from_uid(const BiGraph& g, int u) {
  return u < g.x_count() ? xref(u) : yref(u - g.x_count());
}

}  // namespace

Matching perfect_matching(const BiGraph& g) {
  if (g.x_count() != g.y_count())
    fail(errc::precondition, "perfect matching needs equal sides, got |X|=" +
                                 std::to_string(g.x_count()) +
                                 " |Y|=" + std::to_string(g.y_count()));
  const int n = g.x_count();
  std::vector<int> match_x(n, -1), match_y(n, -1);
  std::vector<char> seen_y(n, 0);
  // Kuhn's augmenting-path algorithm, X vertices tried in index order.
  std::function<bool(int)> try_x = [&](int x) -> bool {
    for (int y : g.adj_x(x)) {
      if (seen_y[y]) continue;
      seen_y[y] = 1;
      if (match_y[y] < 0 || try_x(match_y[y])) {
        match_x[x] = y;
        match_y[y] = x;
        return true;
      }
    }
    return false;
  };
  for (int x = 0; x < n; ++x) {
    std::fill(seen_y.begin(), seen_y.end(), 0);
    if (try_x(x)) continue;
    // Failed augmentation: x together with the X vertices matched into the
    // visited Y set has exactly that Y set as its joint neighborhood.
    std::vector<int> xs{x}, ys;
    for (int y = 0; y < n; ++y) {
      if (!seen_y[y]) continue;
      ys.push_back(y);
      xs.push_back(match_y[y]);
    }
    std::sort(xs.begin(), xs.end());
    throw hall_error("no perfect matching: " + std::to_string(xs.size()) +
                         " left vertices share only " + std::to_string(ys.size()) +
                         " neighbors",
                     std::move(xs), std::move(ys));
  }
  return Matching{std::move(match_x)};
}

Cycle::Cycle(std::vector<VertexRef> raw) : v_(std::move(raw)) {
  const int l = static_cast<int>(v_.size());
  if (l < 4 || l % 2 != 0) fail(errc::argument, "cycle needs even length >= 4, got " + std::to_string(l));
  for (int i = 0; i < l; ++i) {
    if (v_[i].index < 0) fail(errc::argument, "cycle vertex " + to_string(v_[i]) + " has negative index");
    if (v_[i].side == v_[(i + 1) % l].side)
      fail(errc::argument, "cycle does not alternate sides at position " + std::to_string(i));
  }
  {
    auto sorted = v_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(errc::argument, "cycle repeats a vertex");
  }
  // Canonical form: rotate so the lowest X vertex leads, then orient toward
  // its lower-indexed Y neighbor.
  int start = 0;
  for (int i = 1; i < l; ++i) {
    if (v_[i].side != Side::X) continue;
    if (v_[start].side != Side::X || v_[i].index < v_[start].index) start = i;
  }
  std::rotate(v_.begin(), v_.begin() + start, v_.end());
  if (v_.back().index < v_[1].index) {
    std::reverse(v_.begin() + 1, v_.end());
  }
}

std::vector<int> Cycle::x_indices() const {
  std::vector<int> out;
  for (const VertexRef& v : v_)
    if (v.side == Side::X) out.push_back(v.index);
  std::sort(out.begin(), out.end());
  return out;
}

int Cycle::position_of(VertexRef v) const {
  for (int i = 0; i < length(); ++i)
    if (v_[i] == v) return i;
  return -1;
}

VertexRef Cycle::successor(VertexRef v) const {
  int p = position_of(v);
  XCOVER_ASSERT(p >= 0, "successor of " + to_string(v) + ": not on cycle");
  return v_[(p + 1) % length()];
}

VertexRef Cycle::predecessor(VertexRef v) const {
  int p = position_of(v);
  XCOVER_ASSERT(p >= 0, "predecessor of " + to_string(v) + ": not on cycle");
  return v_[(p + length() - 1) % length()];
}

Path Cycle::to_path_deleting_vertex(VertexRef v) const {
  int p = position_of(v);
  XCOVER_ASSERT(p >= 0, "cannot delete " + to_string(v) + ": not on cycle");
  Path out;
  for (int i = 1; i < length(); ++i) out.vertices.push_back(v_[(p + i) % length()]);
  return out;
}

Path Cycle::to_path_breaking_edge(VertexRef a, VertexRef b) const {
  const int l = length();
  int pa = position_of(a), pb = position_of(b);
  XCOVER_ASSERT(pa >= 0 && pb >= 0, "cannot break edge: endpoint not on cycle");
  int step;
  if (pb == (pa + 1) % l)
    step = -1;  // b follows a, so leave a backwards
  else if (pa == (pb + 1) % l)
    step = 1;
  else
    fail(errc::argument,
         "cannot break edge " + to_string(a) + "-" + to_string(b) + ": not a cycle edge");
  Path out;
  for (int i = 0; i < l; ++i) out.vertices.push_back(v_[((pa + i * step) % l + l) % l]);
  return out;
}

bool cycle_valid_in(const BiGraph& g, const Cycle& c) {
  const auto& v = c.vertices();
  for (int i = 0; i < c.length(); ++i) {
    if (!g.contains(v[i])) return false;
    if (!g.adjacent(v[i], v[(i + 1) % c.length()])) return false;
  }
  return true;
}

Path cycle_path_from(const Cycle& c, VertexRef v) {
  return c.to_path_breaking_edge(v, c.successor(v));
}

Path cycle_path_to(const Cycle& c, VertexRef v) {
  Path p = cycle_path_from(c, v);
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

int CyclePacking::covered_vertices() const {
  int total = 0;
  for (const Cycle& c : cycles) total += c.length();
  return total;
}

bool packing_valid_in(const BiGraph& g, const CyclePacking& p) {
  std::vector<char> used(g.x_count() + g.y_count(), 0);
  for (const Cycle& c : p.cycles) {
    if (!cycle_valid_in(g, c)) return false;
    for (const VertexRef& v : c.vertices()) {
      char& slot = used[uid_of(g, v)];
      if (slot) return false;
      slot = 1;
    }
  }
  return true;
}

CyclePacking two_factor(const BiGraph& g) {
  auto d = is_regular(g);
  if (!d || *d < 2)
    fail(errc::precondition, d ? "two-factor needs degree >= 2, graph is " + std::to_string(*d) +
                                     "-regular"
                               : "two-factor needs a regular graph");
  Matching m1 = perfect_matching(g);
  std::vector<std::pair<int, int>> residual;
  for (int x = 0; x < g.x_count(); ++x)
    for (int y : g.adj_x(x))
      if (m1.x_to_y[x] != y) residual.emplace_back(x, y);
  BiGraph r = BiGraph::build(g.x_count(), g.y_count(), residual);
  XCOVER_ASSERT(is_regular(r) == std::optional<int>(*d - 1),
                "residual of a regular graph minus a perfect matching must stay regular");
  Matching m2 = perfect_matching(r);
  std::vector<int> m2_inv(g.y_count(), -1);
  for (int x = 0; x < g.x_count(); ++x) m2_inv[m2.x_to_y[x]] = x;

  // The union of the two matchings is 2-regular: walk it into cycles,
  // starting each at its lowest X vertex.
  std::vector<char> vis(g.x_count(), 0);
  std::vector<Cycle> cycles;
  for (int x0 = 0; x0 < g.x_count(); ++x0) {
    if (vis[x0]) continue;
    std::vector<VertexRef> seq;
    int x = x0;
    do {
      vis[x] = 1;
      seq.push_back(xref(x));
      int y = m1.x_to_y[x];
      seq.push_back(yref(y));
      x = m2_inv[y];
    } while (x != x0);
    cycles.emplace_back(std::move(seq));
  }
  return CyclePacking{std::move(cycles)};
}

void enumerate_cycles_through(const BiGraph& g, VertexRef v, const std::vector<char>& blocked,
                              const std::function<bool(const Cycle&)>& cb) {
  const int nv = g.x_count() + g.y_count();
  XCOVER_ASSERT(static_cast<int>(blocked.size()) == nv, "blocked mask has wrong size");
  const int anchor = uid_of(g, v);
  if (blocked[anchor]) return;
  std::vector<VertexRef> path{v};
  std::vector<char> on(nv, 0);
  on[anchor] = 1;
  bool stop = false;
  auto rec = [&](auto&& self, VertexRef cur) -> void {
    for (VertexRef nb : g.neighbors(cur)) {
      if (stop) return;
      if (nb == v) {
        // Closing edge back to the anchor; keep one of the two orientations.
        if (path.size() >= 4 && uid_of(g, path[1]) < uid_of(g, path.back())) {
          if (!cb(Cycle(path))) stop = true;
        }
        continue;
      }
      int u = uid_of(g, nb);
      if (u <= anchor || blocked[u] || on[u]) continue;
      on[u] = 1;
      path.push_back(nb);
      self(self, nb);
      path.pop_back();
      on[u] = 0;
    }
  };
  rec(rec, v);
}

std::vector<Cycle> all_cycles(const BiGraph& g) {
  // Every cycle alternates sides, so its lowest unified vertex is an X vertex.
  std::vector<Cycle> out;
  std::vector<char> blocked(g.x_count() + g.y_count(), 0);
  for (int i = 0; i < g.x_count(); ++i) {
    enumerate_cycles_through(g, xref(i), blocked, [&](const Cycle& c) {
      out.push_back(c);
      return true;
    });
  }
  return out;
}

namespace {

// Shortest cycle through s in the subgraph avoiding blocked vertices, found
// with one breadth-first search: a non-tree edge between branches that leave
// s through different children closes a shortest cycle through s.
std::optional<Cycle> shortest_cycle_through(const BiGraph& g, int s,
                                            const std::vector<char>& blocked) {
  const int nv = g.x_count() + g.y_count();
  std::vector<int> dist(nv, -1), parent(nv, -1), branch(nv, -1);
  std::deque<int> queue{s};
  dist[s] = 0;
  int best_len = -1, best_u = -1, best_w = -1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (best_len >= 0 && 2 * dist[u] >= best_len) break;
    for (VertexRef nbr : g.neighbors(from_uid(g, u))) {
      int w = uid_of(g, nbr);
      if (blocked[w]) continue;
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        branch[w] = (u == s) ? w : branch[u];
        queue.push_back(w);
      } else if (w != parent[u] && u != s && w != s && branch[u] != branch[w]) {
        int len = dist[u] + dist[w] + 1;
        if (best_len < 0 || len < best_len) {
          best_len = len;
          best_u = u;
          best_w = w;
        }
      }
    }
  }
  if (best_len < 0) return std::nullopt;
  std::vector<VertexRef> seq;
  for (int u = best_u; u != -1; u = parent[u]) seq.push_back(from_uid(g, u));
  std::reverse(seq.begin(), seq.end());  // s .. best_u
  for (int w = best_w; w != s; w = parent[w]) seq.push_back(from_uid(g, w));
  return Cycle(std::move(seq));
}

struct PackSearch {
  const BiGraph& g;
  int nv;
  std::vector<char> decided;
  int covered = 0;
  std::vector<Cycle> cur;
  int best_cov = -1, best_cnt = -1;
  std::vector<Cycle> best;

  explicit PackSearch(const BiGraph& graph)
      : g(graph), nv(graph.x_count() + graph.y_count()), decided(nv, 0) {}

  void rec() {
    int v = -1, undecided = 0;
    for (int u = 0; u < nv; ++u) {
      if (decided[u]) continue;
      ++undecided;
      if (v < 0) v = u;
    }
    if (v < 0) {
      if (covered > best_cov ||
          (covered == best_cov && static_cast<int>(cur.size()) < best_cnt)) {
        best_cov = covered;
        best_cnt = static_cast<int>(cur.size());
        best = cur;
      }
      return;
    }
    int potential = covered + undecided;
    if (potential < best_cov) return;
    // Matching the best coverage from here still takes one more cycle.
    if (potential == best_cov && static_cast<int>(cur.size()) + 1 >= best_cnt) return;

    std::vector<Cycle> cands;
    enumerate_cycles_through(g, from_uid(g, v), decided, [&](const Cycle& c) {
      cands.push_back(c);
      return true;
    });
    std::sort(cands.begin(), cands.end(), [](const Cycle& a, const Cycle& b) {
      if (a.length() != b.length()) return a.length() < b.length();
      return a.vertices() < b.vertices();
    });
    for (const Cycle& c : cands) {
      for (const VertexRef& u : c.vertices()) decided[uid_of(g, u)] = 1;
      covered += c.length();
      cur.push_back(c);
      rec();
      cur.pop_back();
      covered -= c.length();
      for (const VertexRef& u : c.vertices()) decided[uid_of(g, u)] = 0;
    }
    decided[v] = 1;  // leave v on no cycle
    rec();
    decided[v] = 0;
  }
};

}  // namespace

CyclePacking heuristic_cycle_packing(const BiGraph& g) {
  const int nv = g.x_count() + g.y_count();
  std::vector<char> blocked(nv, 0);
  std::vector<Cycle> out;
  while (true) {
    std::optional<Cycle> pick;
    for (int s = 0; s < nv; ++s) {
      if (blocked[s]) continue;
      auto c = shortest_cycle_through(g, s, blocked);
      if (c && (!pick || c->length() < pick->length())) pick = std::move(c);
    }
    if (!pick) break;
    for (const VertexRef& v : pick->vertices()) blocked[uid_of(g, v)] = 1;
    out.push_back(std::move(*pick));
  }
  return CyclePacking{std::move(out)};
}

PackingResult optimal_cycle_packing(const BiGraph& g, const PackingOptions& opts) {
  const int nv = g.x_count() + g.y_count();
  if (nv > opts.vertex_cap) {
    if (!opts.allow_heuristic)
      fail(errc::cap, "exact cycle packing capped at " + std::to_string(opts.vertex_cap) +
                          " vertices, graph has " + std::to_string(nv));
    return PackingResult{heuristic_cycle_packing(g), false};
  }
  PackSearch search(g);
  search.rec();
  XCOVER_ASSERT(search.best_cov >= 0, "packing search must reach a leaf");
  return PackingResult{CyclePacking{std::move(search.best)}, true};
}

}  // namespace xcover
