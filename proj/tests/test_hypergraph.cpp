#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "test_instances.hpp"
#include "xcover/cover.hpp"
#include "xcover/forest_solver.hpp"
#include "xcover/hypergraph.hpp"
#include "xcover/maxdeg3_solver.hpp"

using namespace xcover;
using namespace xcover::testing;

namespace {

Hypergraph random_hypergraph(int nv, int ne, uint64_t seed) {
  std::mt19937_64 rng(seed);
  ne = std::min(ne, (1 << nv) - 1);  // no more edges than distinct subsets
  std::set<std::vector<int>> edges;
  while (static_cast<int>(edges.size()) < ne) {
    std::vector<int> e;
    for (int v = 0; v < nv; ++v)
      if (uniform_unit(rng) < 0.35) e.push_back(v);
    if (e.empty()) e.push_back(static_cast<int>(uniform_below(rng, nv)));
    edges.insert(e);
  }
  return Hypergraph::build(nv, {edges.begin(), edges.end()});
}

}  // namespace

TEST_CASE("build canonicalizes and validates") {
  Hypergraph h = Hypergraph::build(4, {{2, 0, 2}, {3, 1}});
  CHECK(h.edge(0) == std::vector<int>{0, 2});
  CHECK(h.edge(1) == std::vector<int>{1, 3});
  CHECK(h.edge_count() == 2);
  CHECK_THROWS_AS(Hypergraph::build(2, {{}}), error);
  CHECK_THROWS_AS(Hypergraph::build(2, {{0, 2}}), error);
  CHECK_THROWS_AS(Hypergraph::build(2, {{-1}}), error);
  CHECK_THROWS_AS(Hypergraph::build(3, {{0, 1}, {1, 0, 1}}), error);  // same after dedup
}

TEST_CASE("incidence graph") {
  Hypergraph h = fano();
  BiGraph g = incidence_graph(h);
  CHECK(g.x_count() == 7);
  CHECK(g.y_count() == 7);
  CHECK(is_regular(g) == 3);  // Fano: every point on 3 lines, every line 3 points
  for (int i = 0; i < h.edge_count(); ++i)
    for (int v : h.edge(i)) CHECK(g.has_edge(v, i));
}

TEST_CASE("berge path validity") {
  Hypergraph h = Hypergraph::build(5, {{0, 1, 2}, {2, 3}, {3, 4}});
  std::string why;
  CHECK(is_valid_berge_path(h, {{0, 2, 3}, {0, 1}}, &why));
  CHECK(is_valid_berge_path(h, {{1}, {}}, &why));
  CHECK(!is_valid_berge_path(h, {{0, 2, 3}, {0, 0}}, &why));  // repeated edge
  CHECK(!is_valid_berge_path(h, {{0, 0}, {0}}, &why));        // repeated vertex
  CHECK(!is_valid_berge_path(h, {{0, 3}, {1}}, &why));        // 3 not in edge 1
  CHECK(!is_valid_berge_path(h, {{}, {}}, &why));
  CHECK(!is_valid_berge_path(h, {{0, 1}, {2}}, &why));        // 0 not in edge 2
}

TEST_CASE("cover translation to berge paths") {
  Hypergraph h = Hypergraph::build(5, {{0, 1, 2}, {2, 3}, {3, 4}});
  BiGraph g = incidence_graph(h);
  auto [cover, cert] = solve_maxdeg3(g);
  auto berge = to_berge_cover(h, cover);
  std::set<int> covered, used_edges;
  for (const BergePath& p : berge) {
    std::string why;
    CHECK(is_valid_berge_path(h, p, &why));
    for (int v : p.vertices) CHECK(covered.insert(v).second);
    for (int e : p.edges) CHECK(used_edges.insert(e).second);
  }
  CHECK(covered.size() == 5);
}

TEST_CASE("cover translation rejects invalid covers") {
  Hypergraph h = Hypergraph::build(3, {{0, 1}, {1, 2}});
  PathXCover bogus{{Path{{xref(0)}}}};  // misses vertices 1 and 2
  try {
    to_berge_cover(h, bogus);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.kind() == errc::precondition);
  }
}

TEST_CASE("strong independence equals the incidence alpha") {
  CHECK(strong_independence(fano()).size() == 1);
  for (uint64_t seed = 0; seed < 120; ++seed) {
    Hypergraph h = random_hypergraph(2 + seed % 7, 1 + seed % 5, seed + 50);
    std::vector<int> s = strong_independence(h);
    CHECK(static_cast<int>(s.size()) == naive_strong_independence(h));
    for (const auto& e : h.edges()) {
      int hits = 0;
      for (int v : e)
        if (std::count(s.begin(), s.end(), v)) ++hits;
      CHECK(hits <= 1);
    }
  }
}

TEST_CASE("subhypergraph restricts and dedups") {
  Hypergraph h = Hypergraph::build(6, {{0, 1, 2}, {1, 2, 3}, {4, 5}, {0, 3}});
  Hypergraph s = subhypergraph(h, {1, 2, 4});
  CHECK(s.vertex_count() == 3);
  // {0,1,2} and {1,2,3} both restrict to {1,2} -> reindexed {0,1}; {4,5} -> {4} -> {2}.
  REQUIRE(s.edge_count() == 2);
  CHECK(s.edge(0) == std::vector<int>{0, 1});
  CHECK(s.edge(1) == std::vector<int>{2});

  Hypergraph full = subhypergraph(h, {0, 1, 2, 3, 4, 5});
  CHECK(full.edge_count() == h.edge_count());
  CHECK(full.edges() == h.edges());
}

TEST_CASE("forest incidence round trip") {
  // A hypergraph whose incidence graph is a tree solves through the forest
  // path and still translates.
  Hypergraph h = Hypergraph::build(4, {{0, 1}, {1, 2}, {2, 3}});
  BiGraph g = incidence_graph(h);
  REQUIRE(!girth(g).has_value());
  auto [cover, cert] = solve_forest(g);
  auto berge = to_berge_cover(h, cover);
  std::set<int> covered;
  for (const BergePath& p : berge)
    for (int v : p.vertices) covered.insert(v);
  CHECK(covered.size() == 4);
}
