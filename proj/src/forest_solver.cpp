#include "xcover/forest_solver.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace xcover {

namespace {

// Rooted view of the tree containing x0, produced by one breadth-first
// search. In a tree the BFS parent is the unique neighbor toward the root.
struct RootedTree {
  std::vector<int> depth_x, depth_y;    // -1 outside the component
  std::vector<int> parent_of_x;         // Y index, -1 for the root
  std::vector<int> parent_of_y;         // X index
};

RootedTree root_at(const BiGraph& g, int x0) {
  RootedTree t{std::vector<int>(g.x_count(), -1), std::vector<int>(g.y_count(), -1),
               std::vector<int>(g.x_count(), -1), std::vector<int>(g.y_count(), -1)};
  std::deque<VertexRef> queue{xref(x0)};
  t.depth_x[x0] = 0;
  while (!queue.empty()) {
    VertexRef v = queue.front();
    queue.pop_front();
    if (v.side == Side::X) {
      for (int y : g.adj_x(v.index)) {
        if (t.depth_y[y] >= 0) continue;
        t.depth_y[y] = t.depth_x[v.index] + 1;
        t.parent_of_y[y] = v.index;
        queue.push_back(yref(y));
      }
    } else {
      for (int x : g.adj_y(v.index)) {
        if (t.depth_x[x] >= 0) continue;
        t.depth_x[x] = t.depth_y[v.index] + 1;
        t.parent_of_x[x] = v.index;
        queue.push_back(xref(x));
      }
    }
  }
  return t;
}

std::vector<int> children_of_y(const BiGraph& g, const RootedTree& t, int y) {
  std::vector<int> out;
  for (int x : g.adj_y(y))
    if (x != t.parent_of_y[y]) out.push_back(x);
  return out;
}

std::vector<int> children_of_x(const BiGraph& g, const RootedTree& t, int x) {
  std::vector<int> out;
  for (int y : g.adj_x(x))
    if (y != t.parent_of_x[x]) out.push_back(y);
  return out;
}

// Rewrites a subproblem's cover and subset back into the parent's indices.
void lift(const InducedSubgraph& sub, PathXCover& cover, std::vector<int>& s) {
  for (Path& p : cover.paths)
    for (VertexRef& v : p.vertices)
      v.index = v.side == Side::X ? sub.x_to_parent[v.index] : sub.y_to_parent[v.index];
  for (int& x : s) x = sub.x_to_parent[x];
}

// Induction invariant: the cover built so far never exceeds the deficiency
// its subset certifies on the current graph.
void check_level(const BiGraph& g, const PathXCover& cover, std::vector<int>& s) {
  std::sort(s.begin(), s.end());
  XCOVER_ASSERT(std::adjacent_find(s.begin(), s.end()) == s.end(),
                "certificate subset repeats a vertex");
  XCOVER_ASSERT(static_cast<int>(cover.paths.size()) <= deficiency_of(g, s).value,
                "cover exceeds the certified deficiency at an induction step");
}

std::pair<PathXCover, std::vector<int>> solve_rec(const BiGraph& g);

// One reduction at a Y vertex whose children are all leaves: delete the
// vertex and its k >= 2 children, cover them by one 2-edge path plus k-2
// singletons, and put every child into the subset. The parent vertex keeps
// the deleted Y vertex out of the joint neighborhood of anything else.
std::pair<PathXCover, std::vector<int>> reduce_leafy_y(const BiGraph& g, int y,
                                                       const std::vector<int>& children) {
  XCOVER_ASSERT(children.size() >= 2, "leafy reduction needs at least two children");
  for (int c : children)
    XCOVER_ASSERT(g.deg_x(c) == 1, "child x" + std::to_string(c) + " of a deepest-level Y vertex must be a leaf");
  auto sub = remove_vertices(g, children, {y});
  auto [cover, s] = solve_rec(sub.graph);
  lift(sub, cover, s);
  cover.paths.push_back(Path{{xref(children[0]), yref(y), xref(children[1])}});
  for (std::size_t i = 2; i < children.size(); ++i)
    cover.paths.push_back(Path{{xref(children[i])}});
  s.insert(s.end(), children.begin(), children.end());
  check_level(g, cover, s);
  return {std::move(cover), std::move(s)};
}

// Deepest leaf x hangs off y whose parent x* has degree <= 2: delete x and
// y; x* becomes a path endpoint in the subproblem, so its path extends
// through y to x. The subset is untouched.
std::pair<PathXCover, std::vector<int>> reduce_extend(const BiGraph& g, int x, int y, int xstar) {
  auto sub = remove_vertices(g, {x}, {y});
  auto [cover, s] = solve_rec(sub.graph);
  lift(sub, cover, s);
  bool extended = false;
  for (Path& p : cover.paths) {
    if (p.vertices.back() == xref(xstar)) {
      p.vertices.push_back(yref(y));
      p.vertices.push_back(xref(x));
      extended = true;
      break;
    }
    if (p.vertices.front() == xref(xstar)) {
      p.vertices.insert(p.vertices.begin(), {xref(x), yref(y)});
      extended = true;
      break;
    }
  }
  XCOVER_ASSERT(extended, "x" + std::to_string(xstar) +
                              " must end a path of the subproblem when its degree is at most 2");
  check_level(g, cover, s);
  return {std::move(cover), std::move(s)};
}

// Deepest leaf x hangs off y whose parent x* has degree >= 3 and every
// child of x* has a single leaf child: delete x and y, then repair the
// subset so x* is not in it, using x_ref, the grandchild of x* through the
// lowest surviving sibling; finally add x as its own path and subset member.
std::pair<PathXCover, std::vector<int>> reduce_sibling(const BiGraph& g, int x, int y, int xstar,
                                                       int x_ref) {
  auto sub = remove_vertices(g, {x}, {y});
  auto [cover, s] = solve_rec(sub.graph);
  lift(sub, cover, s);
  bool has_xstar = std::find(s.begin(), s.end(), xstar) != s.end();
  bool has_xref = std::find(s.begin(), s.end(), x_ref) != s.end();
  if (has_xstar && !has_xref) {
    std::replace(s.begin(), s.end(), xstar, x_ref);
  } else if (has_xstar && has_xref) {
    s.erase(std::remove(s.begin(), s.end(), xstar), s.end());
  }
  s.push_back(x);
  cover.paths.push_back(Path{{xref(x)}});
  check_level(g, cover, s);
  return {std::move(cover), std::move(s)};
}

// Invariant throughout the recursion: g is a forest and every Y vertex has
// degree >= 2 (reductions delete Y vertices but never lower other Y degrees).
std::pair<PathXCover, std::vector<int>> solve_rec(const BiGraph& g) {
  if (g.x_count() == 0) {
    XCOVER_ASSERT(g.y_count() == 0, "a trimmed forest cannot keep Y vertices without X");
    return {PathXCover{}, {}};
  }
  // The lowest X vertex is isolated exactly when its component is {x0}:
  // any neighbor would be a Y vertex of degree >= 2 bringing another X.
  if (g.deg_x(0) == 0) {
    auto sub = remove_vertices(g, {0}, {});
    auto [cover, s] = solve_rec(sub.graph);
    lift(sub, cover, s);
    cover.paths.push_back(Path{{xref(0)}});
    s.push_back(0);
    check_level(g, cover, s);
    return {std::move(cover), std::move(s)};
  }

  RootedTree t = root_at(g, 0);
  int x = -1;
  for (int i = 0; i < g.x_count(); ++i)
    if (t.depth_x[i] >= 0 && (x < 0 || t.depth_x[i] > t.depth_x[x])) x = i;
  XCOVER_ASSERT(t.depth_x[x] >= 2, "a rooted tree with two X vertices has one at depth >= 2");
  int y = t.parent_of_x[x];

  std::vector<int> siblings = children_of_y(g, t, y);
  if (siblings.size() >= 2) return reduce_leafy_y(g, y, siblings);

  int xstar = t.parent_of_y[y];
  if (g.deg_x(xstar) <= 2) return reduce_extend(g, x, y, xstar);

  // x* has other children; if any of them has several (leaf) children the
  // leafy reduction applies there first.
  std::vector<int> ys = children_of_x(g, t, xstar);
  XCOVER_ASSERT(ys.size() >= 2, "a degree-3 parent keeps a sibling after losing one child");
  for (int yi : ys) {
    std::vector<int> ch = children_of_y(g, t, yi);
    XCOVER_ASSERT(!ch.empty(), "Y vertices have degree >= 2, so every child of x* has a child");
    if (ch.size() >= 2) return reduce_leafy_y(g, yi, ch);
  }
  int y_ref = ys[0] == y ? ys[1] : ys[0];
  int x_ref = children_of_y(g, t, y_ref)[0];
  XCOVER_ASSERT(g.deg_x(x_ref) == 1, "the sibling's child must be a leaf at the deepest level");
  return reduce_sibling(g, x, y, xstar, x_ref);
}

}  // namespace

std::pair<PathXCover, DeficiencyCertificate> solve_forest(const BiGraph& g) {
  if (auto cyc = girth(g))
    fail(errc::precondition,
         "forest solver needs an acyclic graph, found a cycle of length " + std::to_string(*cyc));
  // Y vertices of degree <= 1 never join any joint neighborhood and no path
  // needs them; drop them up front.
  std::vector<int> keep_x(g.x_count()), keep_y;
  std::iota(keep_x.begin(), keep_x.end(), 0);
  for (int j = 0; j < g.y_count(); ++j)
    if (g.deg_y(j) >= 2) keep_y.push_back(j);
  auto sub = induce(g, keep_x, keep_y);
  auto [cover, s] = solve_rec(sub.graph);
  lift(sub, cover, s);
  std::sort(s.begin(), s.end());

  DeficiencyCertificate cert;
  cert.subset = std::move(s);
  cert.lambda = lambda_set(g, cert.subset);
  cert.value = static_cast<int>(cert.subset.size()) - static_cast<int>(cert.lambda.size());
  Verdict v = certify(g, cover, cert);
  XCOVER_ASSERT(v.valid, v.violations.empty() ? "certification failed" : v.violations.front());
  return {std::move(cover), std::move(cert)};
}

}  // namespace xcover
