#pragma once

#include <vector>

#include "xcover/bigraph.hpp"
#include "xcover/cover.hpp"

namespace xcover {

// A hypergraph: vertices 0..vertex_count-1 and a list of pairwise distinct
// non-empty edges, each stored as a sorted vertex set.
class Hypergraph {
 public:
  // Canonicalizes each edge (sorts, drops repeats) and rejects empty edges,
  // out-of-range vertices, and duplicate edges.
  static Hypergraph build(int vertex_count, std::vector<std::vector<int>> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  const std::vector<int>& edge(int i) const;

 private:
  int vertex_count_ = 0;
  std::vector<std::vector<int>> edges_;
};

// Alternating sequence (v0, e1, v1, ..., el, vl): distinct vertices, distinct
// edges, and {v(i-1), vi} contained in e_i throughout.
struct BergePath {
  std::vector<int> vertices;  // l + 1 entries
  std::vector<int> edges;     // l entries
};

bool is_valid_berge_path(const Hypergraph& h, const BergePath& p, std::string* why = nullptr);

// The (X,Y)-bigraph with X the vertices, Y the edges, adjacency = membership.
BiGraph incidence_graph(const Hypergraph& h);

// Translates a path X-cover of the incidence graph into vertex- and
// edge-disjoint Berge paths covering every vertex of h. Y endpoints are
// trimmed first (a Y endpoint covers no vertex of h); paths left empty by
// trimming are dropped. Throws errc::precondition when the cover is invalid.
std::vector<BergePath> to_berge_cover(const Hypergraph& h, const PathXCover& c);

// Maximum set of vertices meeting every edge at most once: exactly a
// Lambda-independent set of the incidence graph. Delegates to alpha_lambda
// and re-checks the defining property directly on h. Same cap as
// alpha_lambda; throws errc::cap beyond it.
std::vector<int> strong_independence(const Hypergraph& h, int cap = 30);

// Restriction to s: vertices reindexed along sorted s, edges e cap s for
// every edge meeting s, deduplicated keeping first occurrence.
Hypergraph subhypergraph(const Hypergraph& h, const std::vector<int>& s);

}  // namespace xcover
