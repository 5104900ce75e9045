#include "xcover/bigraph.hpp"

#include <algorithm>
#include <queue>

namespace xcover {

std::string to_string(VertexRef v) {
  return (v.side == Side::X ? "x" : "y") + std::to_string(v.index);
}

BiGraph BiGraph::build(int x_count, int y_count, const std::vector<std::pair<int, int>>& edges) {
  if (x_count < 0 || y_count < 0)
    fail(errc::argument, "vertex counts must be non-negative");
  BiGraph g;
  g.x_count_ = x_count;
  g.y_count_ = y_count;
  g.adj_x_.assign(x_count, {});
  g.adj_y_.assign(y_count, {});
  for (const auto& [x, y] : edges) {
    if (x < 0 || x >= x_count)
      fail(errc::argument, "edge (" + std::to_string(x) + "," + std::to_string(y) +
                               "): x index out of range (x_count=" + std::to_string(x_count) + ")");
    if (y < 0 || y >= y_count)
      fail(errc::argument, "edge (" + std::to_string(x) + "," + std::to_string(y) +
                               "): y index out of range (y_count=" + std::to_string(y_count) + ")");
    g.adj_x_[x].push_back(y);
  }
  g.edge_count_ = 0;
  for (int i = 0; i < x_count; ++i) {
    auto& a = g.adj_x_[i];
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    g.edge_count_ += static_cast<int>(a.size());
    for (int j : a) g.adj_y_[j].push_back(i);
  }
  // adj_y_ ends up sorted because x indices are visited in increasing order
  return g;
}

const std::vector<int>& BiGraph::adj_x(int i) const {
  if (i < 0 || i >= x_count_) fail(errc::argument, "x index " + std::to_string(i) + " out of range");
  return adj_x_[i];
}

const std::vector<int>& BiGraph::adj_y(int j) const {
  if (j < 0 || j >= y_count_) fail(errc::argument, "y index " + std::to_string(j) + " out of range");
  return adj_y_[j];
}

bool BiGraph::has_edge(int x, int y) const {
  const auto& a = adj_x(x);
  return std::binary_search(a.begin(), a.end(), y);
}

bool BiGraph::adjacent(VertexRef a, VertexRef b) const {
  if (a.side == b.side) return false;
  return a.side == Side::X ? has_edge(a.index, b.index) : has_edge(b.index, a.index);
}

std::vector<VertexRef> BiGraph::neighbors(VertexRef v) const {
  std::vector<VertexRef> out;
  if (v.side == Side::X) {
    for (int j : adj_x(v.index)) out.push_back(yref(j));
  } else {
    for (int i : adj_y(v.index)) out.push_back(xref(i));
  }
  return out;
}

std::vector<std::pair<int, int>> BiGraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int i = 0; i < x_count_; ++i)
    for (int j : adj_x_[i]) out.emplace_back(i, j);
  return out;
}

namespace {

// Unified vertex numbering used by the traversal helpers: X vertices come
// first (0..nx-1), then Y vertices (nx..nx+ny-1).
inline int uid(const BiGraph& g, VertexRef v) {
  return v.side == Side::X ? v.index : g.x_count() + v.index;
}
inline VertexRef from_uid(const BiGraph& g, int u) {
  return u < g.x_count() ? xref(u) : yref(u - g.x_count());
}

}  // namespace

std::optional<int> girth(const BiGraph& g) {
  const int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(n), parent(n);
  // BFS from every vertex; a non-tree edge (u,w) closes a walk of length
  // dist[u]+dist[w]+1 through the root, which bounds the girth from above,
  // and for a root on a shortest cycle some such walk attains it exactly.
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (VertexRef nb : g.neighbors(from_uid(g, u))) {
        int w = uid(g, nb);
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          int cand = dist[u] + dist[w] + 1;
          if (best < 0 || cand < best) best = cand;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

int max_degree(const BiGraph& g) {
  int d = 0;
  for (int i = 0; i < g.x_count(); ++i) d = std::max(d, g.deg_x(i));
  for (int j = 0; j < g.y_count(); ++j) d = std::max(d, g.deg_y(j));
  return d;
}

std::optional<int> is_regular(const BiGraph& g) {
  if (g.vertex_count() == 0) return 0;
  int d = g.x_count() > 0 ? g.deg_x(0) : g.deg_y(0);
  for (int i = 0; i < g.x_count(); ++i)
    if (g.deg_x(i) != d) return std::nullopt;
  for (int j = 0; j < g.y_count(); ++j)
    if (g.deg_y(j) != d) return std::nullopt;
  return d;
}

std::vector<Component> components(const BiGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<Component> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    comp[s] = id;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      VertexRef v = from_uid(g, u);
      (v.side == Side::X ? out[id].xs : out[id].ys).push_back(v.index);
      for (VertexRef nb : g.neighbors(v)) {
        int w = uid(g, nb);
        if (comp[w] < 0) {
          comp[w] = id;
          q.push(w);
        }
      }
    }
  }
  for (auto& c : out) {
    std::sort(c.xs.begin(), c.xs.end());
    std::sort(c.ys.begin(), c.ys.end());
  }
  return out;
}

InducedSubgraph induce(const BiGraph& g, const std::vector<int>& xs, const std::vector<int>& ys) {
  InducedSubgraph s;
  s.x_to_parent = xs;
  s.y_to_parent = ys;
  std::sort(s.x_to_parent.begin(), s.x_to_parent.end());
  s.x_to_parent.erase(std::unique(s.x_to_parent.begin(), s.x_to_parent.end()), s.x_to_parent.end());
  std::sort(s.y_to_parent.begin(), s.y_to_parent.end());
  s.y_to_parent.erase(std::unique(s.y_to_parent.begin(), s.y_to_parent.end()), s.y_to_parent.end());

  s.x_from_parent.assign(g.x_count(), -1);
  s.y_from_parent.assign(g.y_count(), -1);
  for (size_t i = 0; i < s.x_to_parent.size(); ++i) {
    int p = s.x_to_parent[i];
    if (p < 0 || p >= g.x_count()) fail(errc::argument, "induce: x index out of range");
    s.x_from_parent[p] = static_cast<int>(i);
  }
  for (size_t j = 0; j < s.y_to_parent.size(); ++j) {
    int p = s.y_to_parent[j];
    if (p < 0 || p >= g.y_count()) fail(errc::argument, "induce: y index out of range");
    s.y_from_parent[p] = static_cast<int>(j);
  }

  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < s.x_to_parent.size(); ++i)
    for (int j : g.adj_x(s.x_to_parent[i]))
      if (s.y_from_parent[j] >= 0) edges.emplace_back(static_cast<int>(i), s.y_from_parent[j]);
  s.graph = BiGraph::build(static_cast<int>(s.x_to_parent.size()),
                           static_cast<int>(s.y_to_parent.size()), edges);
  return s;
}

InducedSubgraph remove_vertices(const BiGraph& g, const std::vector<int>& xs,
                                const std::vector<int>& ys) {
  std::vector<char> drop_x(g.x_count(), 0), drop_y(g.y_count(), 0);
  for (int i : xs) {
    if (i < 0 || i >= g.x_count()) fail(errc::argument, "remove_vertices: x index out of range");
    drop_x[i] = 1;
  }
  for (int j : ys) {
    if (j < 0 || j >= g.y_count()) fail(errc::argument, "remove_vertices: y index out of range");
    drop_y[j] = 1;
  }
  std::vector<int> keep_x, keep_y;
  for (int i = 0; i < g.x_count(); ++i)
    if (!drop_x[i]) keep_x.push_back(i);
  for (int j = 0; j < g.y_count(); ++j)
    if (!drop_y[j]) keep_y.push_back(j);
  return induce(g, keep_x, keep_y);
}

}  // namespace xcover
