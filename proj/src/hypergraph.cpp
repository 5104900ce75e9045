#include "xcover/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "xcover/deficiency.hpp"

namespace xcover {

Hypergraph Hypergraph::build(int vertex_count, std::vector<std::vector<int>> edges) {
  if (vertex_count < 0) fail(errc::argument, "vertex count must be non-negative");
  Hypergraph h;
  h.vertex_count_ = vertex_count;
  std::set<std::vector<int>> seen;
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.empty()) fail(errc::argument, "empty edge");
    if (e.front() < 0 || e.back() >= vertex_count)
      fail(errc::argument, "edge vertex out of range (vertex_count=" +
                               std::to_string(vertex_count) + ")");
    if (!seen.insert(e).second) fail(errc::argument, "duplicate edge");
    h.edges_.push_back(std::move(e));
  }
  return h;
}

const std::vector<int>& Hypergraph::edge(int i) const {
  if (i < 0 || i >= edge_count())
    fail(errc::argument, "edge index " + std::to_string(i) + " out of range");
  return edges_[i];
}

bool is_valid_berge_path(const Hypergraph& h, const BergePath& p, std::string* why) {
  auto reject = [&](const std::string& r) {
    if (why) *why = r;
    return false;
  };
  if (p.vertices.empty()) return reject("no vertices");
  if (p.edges.size() + 1 != p.vertices.size())
    return reject("edge count is not one less than vertex count");
  std::set<int> vs(p.vertices.begin(), p.vertices.end());
  if (vs.size() != p.vertices.size()) return reject("repeated vertex");
  std::set<int> es(p.edges.begin(), p.edges.end());
  if (es.size() != p.edges.size()) return reject("repeated edge");
  for (int v : p.vertices)
    if (v < 0 || v >= h.vertex_count()) return reject("vertex out of range");
  for (size_t i = 0; i < p.edges.size(); ++i) {
    if (p.edges[i] < 0 || p.edges[i] >= h.edge_count()) return reject("edge out of range");
    const auto& e = h.edge(p.edges[i]);
    for (int v : {p.vertices[i], p.vertices[i + 1]})
      if (!std::binary_search(e.begin(), e.end(), v))
        return reject("edge " + std::to_string(p.edges[i]) + " misses vertex " +
                      std::to_string(v));
  }
  return true;
}

BiGraph incidence_graph(const Hypergraph& h) {
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < h.edge_count(); ++j)
    for (int v : h.edge(j)) edges.emplace_back(v, j);
  return BiGraph::build(h.vertex_count(), h.edge_count(), edges);
}

std::vector<BergePath> to_berge_cover(const Hypergraph& h, const PathXCover& c) {
  BiGraph g = incidence_graph(h);
  Verdict verdict = verify_cover(g, c);
  if (!verdict.valid)
    fail(errc::precondition,
         "cover is not valid in the incidence graph: " +
             (verdict.violations.empty() ? std::string("unknown") : verdict.violations[0]));

  std::vector<BergePath> out;
  std::vector<char> covered(h.vertex_count(), 0);
  for (const Path& p : c.paths) {
    Path t = trim_y_endpoints(p);
    if (t.vertices.empty()) continue;
    BergePath bp;
    for (const VertexRef& v : t.vertices) {
      if (v.side == Side::X)
        bp.vertices.push_back(v.index);
      else
        bp.edges.push_back(v.index);
    }
    std::string why;
    XCOVER_ASSERT(is_valid_berge_path(h, bp, &why), "translated path is not a Berge path: " + why);
    for (int v : bp.vertices) {
      XCOVER_ASSERT(!covered[v], "vertex covered twice");
      covered[v] = 1;
    }
    out.push_back(std::move(bp));
  }
  for (int v = 0; v < h.vertex_count(); ++v)
    XCOVER_ASSERT(covered[v], "vertex " + std::to_string(v) + " left uncovered");
  return out;
}

std::vector<int> strong_independence(const Hypergraph& h, int cap) {
  LambdaIndependentSet s = alpha_lambda(incidence_graph(h), cap);
  for (const auto& e : h.edges()) {
    int inside = 0;
    for (int v : e)
      if (std::binary_search(s.subset.begin(), s.subset.end(), v)) ++inside;
    XCOVER_ASSERT(inside <= 1, "an edge meets the independent set twice");
  }
  return s.subset;
}

Hypergraph subhypergraph(const Hypergraph& h, const std::vector<int>& s) {
  std::vector<int> keep = s;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (!keep.empty() && (keep.front() < 0 || keep.back() >= h.vertex_count()))
    fail(errc::argument, "restriction vertex out of range");
  std::vector<int> newindex(h.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) newindex[keep[i]] = i;

  std::vector<std::vector<int>> edges;
  std::set<std::vector<int>> seen;
  for (const auto& e : h.edges()) {
    std::vector<int> cut;
    for (int v : e)
      if (newindex[v] >= 0) cut.push_back(newindex[v]);
    if (cut.empty()) continue;
    if (seen.insert(cut).second) edges.push_back(std::move(cut));
  }
  return Hypergraph::build(static_cast<int>(keep.size()), std::move(edges));
}

}  // namespace xcover
