#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xcover/errors.hpp"

namespace xcover {

enum class Side : uint8_t { X, Y };

// A vertex of a bigraph, identified by side and index within that side.
struct VertexRef {
  Side side;
  int index;
  auto operator<=>(const VertexRef&) const = default;
};

inline VertexRef xref(int i) { return {Side::X, i}; }
inline VertexRef yref(int j) { return {Side::Y, j}; }

std::string to_string(VertexRef v);  // "x3", "y0"

// Bipartite graph with an ordered bipartition (X, Y). Adjacency lists are
// kept sorted on both sides and the edge set is symmetric by construction.
// Instances are immutable after build(); solvers that shrink a graph produce
// a new one together with an index remap (see induce / remove_vertices).
class BiGraph {
 public:
  BiGraph() = default;

  // Validates counts and edges, sorts and deduplicates. Throws errc::argument
  // naming the offending pair on out-of-range endpoints.
  static BiGraph build(int x_count, int y_count, const std::vector<std::pair<int, int>>& edges);

  int x_count() const { return x_count_; }
  int y_count() const { return y_count_; }
  int vertex_count() const { return x_count_ + y_count_; }
  int edge_count() const { return edge_count_; }

  const std::vector<int>& adj_x(int i) const;
  const std::vector<int>& adj_y(int j) const;
  int deg_x(int i) const { return static_cast<int>(adj_x(i).size()); }
  int deg_y(int j) const { return static_cast<int>(adj_y(j).size()); }
  int deg(VertexRef v) const { return v.side == Side::X ? deg_x(v.index) : deg_y(v.index); }

  bool has_edge(int x, int y) const;
  bool adjacent(VertexRef a, VertexRef b) const;
  std::vector<VertexRef> neighbors(VertexRef v) const;

  // Edges as (x, y) pairs in lexicographic order.
  std::vector<std::pair<int, int>> edge_list() const;

  bool contains(VertexRef v) const {
    return v.index >= 0 && v.index < (v.side == Side::X ? x_count_ : y_count_);
  }

 private:
  int x_count_ = 0, y_count_ = 0, edge_count_ = 0;
  std::vector<std::vector<int>> adj_x_, adj_y_;
};

// Length of a shortest cycle; nullopt when the graph is acyclic.
std::optional<int> girth(const BiGraph& g);

// Largest degree over both sides; 0 for the empty graph.
int max_degree(const BiGraph& g);

// The common degree d when every vertex on both sides has degree d,
// nullopt otherwise. The empty graph is 0-regular.
std::optional<int> is_regular(const BiGraph& g);

struct Component {
  std::vector<int> xs, ys;  // sorted vertex indices per side
};

// Connected components, ordered by their smallest vertex (X first).
std::vector<Component> components(const BiGraph& g);

// A subgraph together with index maps between it and its parent graph.
// *_to_parent[new] = parent index; *_from_parent[parent] = new index or -1.
struct InducedSubgraph {
  BiGraph graph;
  std::vector<int> x_to_parent, y_to_parent;
  std::vector<int> x_from_parent, y_from_parent;
};

// Subgraph induced on the given (deduplicated) vertex sets.
InducedSubgraph induce(const BiGraph& g, const std::vector<int>& xs, const std::vector<int>& ys);

// Subgraph obtained by deleting the given vertices.
InducedSubgraph remove_vertices(const BiGraph& g, const std::vector<int>& xs,
                                const std::vector<int>& ys);

}  // namespace xcover
