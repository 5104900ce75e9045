#pragma once

#include <functional>
#include <vector>

#include "xcover/bigraph.hpp"
#include "xcover/cover.hpp"

namespace xcover {

// Perfect matching as the X -> Y assignment.
struct Matching {
  std::vector<int> x_to_y;
};

// Thrown when no perfect matching exists; carries a witnessing X set whose
// joint neighborhood y_violator is strictly smaller.
class hall_error : public error {
 public:
  hall_error(const std::string& what, std::vector<int> xs, std::vector<int> ys)
      : error(errc::precondition, what), x_violator(std::move(xs)), y_violator(std::move(ys)) {}
  std::vector<int> x_violator, y_violator;
};

Matching perfect_matching(const BiGraph& g);

// A cycle stored as an alternating vertex sequence of even length >= 4,
// starting at its lowest X vertex in a fixed orientation.
class Cycle {
 public:
  // Canonicalizes the raw sequence (rotation + reflection); validates
  // alternation and length, not membership in any particular graph.
  explicit Cycle(std::vector<VertexRef> raw);

  const std::vector<VertexRef>& vertices() const { return v_; }
  int length() const { return static_cast<int>(v_.size()); }
  std::vector<int> x_indices() const;
  int position_of(VertexRef v) const;  // -1 when absent
  bool contains(VertexRef v) const { return position_of(v) >= 0; }
  VertexRef successor(VertexRef v) const;
  VertexRef predecessor(VertexRef v) const;

  // The cycle minus one vertex, as the path from its successor all the way
  // around to its predecessor.
  Path to_path_deleting_vertex(VertexRef v) const;

  // The cycle minus the edge {a, b}, as the path starting at a, leaving away
  // from b, and ending at b. Covers every cycle vertex.
  Path to_path_breaking_edge(VertexRef a, VertexRef b) const;

 private:
  std::vector<VertexRef> v_;
};

bool cycle_valid_in(const BiGraph& g, const Cycle& c);

// Hamiltonian path of the cycle that drops the edge v-successor(v):
// cycle_path_from starts at v and walks backwards around; cycle_path_to is
// its reverse, ending at v. Both cover every cycle vertex.
Path cycle_path_from(const Cycle& c, VertexRef v);
Path cycle_path_to(const Cycle& c, VertexRef v);

struct CyclePacking {
  std::vector<Cycle> cycles;
  int covered_vertices() const;
};

// True when the cycles are valid in g and pairwise vertex-disjoint.
bool packing_valid_in(const BiGraph& g, const CyclePacking& p);

// Decomposes a d-regular bigraph (d >= 2) into a 2-factor: two successive
// perfect matchings whose union is a disjoint cycle family covering every
// vertex. Cycles are listed by their lowest X vertex.
CyclePacking two_factor(const BiGraph& g);

struct PackingOptions {
  int vertex_cap = 24;
  bool allow_heuristic = false;  // above the cap, fall back to a greedy packing
};

struct PackingResult {
  CyclePacking packing;
  bool certified = true;  // false when the heuristic fallback produced it
};

// Packing of pairwise vertex-disjoint cycles maximizing covered vertices,
// breaking ties by fewest cycles. Exact branch and bound under the cap;
// above it, errc::cap unless the heuristic fallback is enabled.
PackingResult optimal_cycle_packing(const BiGraph& g, const PackingOptions& opts = {});

// Greedy fallback: repeatedly remove a shortest cycle. No optimality claim.
CyclePacking heuristic_cycle_packing(const BiGraph& g);

// All cycles through v avoiding blocked vertices and any vertex smaller than
// v in the unified order (X block first, then Y; blocked is indexed the same
// way and sized x_count + y_count). Return false from the callback to stop.
// Used by the packing search and by test oracles.
void enumerate_cycles_through(const BiGraph& g, VertexRef v, const std::vector<char>& blocked,
                              const std::function<bool(const Cycle&)>& cb);

// Every cycle of g, each exactly once (enumerated at its smallest vertex).
std::vector<Cycle> all_cycles(const BiGraph& g);

}  // namespace xcover
