#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_instances.hpp"
#include "xcover/bigraph.hpp"
#include "xcover/json_io.hpp"

using namespace xcover;
using namespace xcover::testing;

TEST_CASE("build validates counts and edge endpoints") {
  CHECK_THROWS_AS(BiGraph::build(-1, 0, {}), error);
  CHECK_THROWS_AS(BiGraph::build(2, 2, {{2, 0}}), error);
  CHECK_THROWS_AS(BiGraph::build(2, 2, {{0, -1}}), error);
  try {
    BiGraph::build(1, 1, {{0, 5}});
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.kind() == errc::argument);
  }
}

TEST_CASE("build sorts adjacency and drops duplicate edges") {
  BiGraph g = BiGraph::build(2, 2, {{1, 1}, {0, 1}, {0, 0}, {0, 1}});
  CHECK(g.edge_count() == 3);
  CHECK(g.adj_x(0) == std::vector<int>{0, 1});
  CHECK(g.adj_y(1) == std::vector<int>{0, 1});
  CHECK(g.deg_x(1) == 1);
  CHECK(g.has_edge(0, 1));
  CHECK(!g.has_edge(1, 0));
  CHECK(g.edge_list() == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("vertex refs order and print") {
  CHECK(xref(0) < xref(1));
  CHECK(xref(5) < yref(0));
  CHECK(to_string(xref(3)) == "x3");
  CHECK(to_string(yref(0)) == "y0");
  BiGraph g = p3();
  CHECK(g.adjacent(xref(0), yref(0)));
  CHECK(g.adjacent(yref(0), xref(1)));
  CHECK(!g.adjacent(xref(0), xref(1)));
  CHECK(g.neighbors(yref(0)) == std::vector<VertexRef>{xref(0), xref(1)});
}

TEST_CASE("girth") {
  CHECK(girth(c6()) == 6);
  CHECK(girth(c50()) == 50);
  CHECK(girth(k33()) == 4);
  CHECK(girth(q3()) == 4);
  CHECK(!girth(star3()).has_value());
  CHECK(!girth(caterpillar()).has_value());
  CHECK(!girth(BiGraph::build(0, 0, {})).has_value());
  CHECK(girth(c6_pendant()) == 6);
}

TEST_CASE("girth agrees with cycle enumeration on random graphs") {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    BiGraph g = gen_random_bigraph(4, 4, 0.2 + 0.1 * (seed % 7), seed);
    CHECK(girth(g) == naive_girth(g));
  }
}

TEST_CASE("max degree and regularity") {
  CHECK(max_degree(k23()) == 3);
  CHECK(!is_regular(k23()).has_value());
  CHECK(is_regular(k33()) == 3);
  CHECK(is_regular(q3()) == 3);
  CHECK(is_regular(c6()) == 2);
  CHECK(is_regular(BiGraph::build(0, 0, {})) == 0);
  CHECK(max_degree(BiGraph::build(0, 0, {})) == 0);
  CHECK(max_degree(star3()) == 3);
}

TEST_CASE("components ordered by smallest vertex") {
  BiGraph g = BiGraph::build(4, 3, {{0, 2}, {3, 1}});
  auto comp = components(g);
  REQUIRE(comp.size() == 5);
  CHECK(comp[0].xs == std::vector<int>{0});
  CHECK(comp[0].ys == std::vector<int>{2});
  CHECK(comp[1].xs == std::vector<int>{1});
  CHECK(comp[2].xs == std::vector<int>{2});
  CHECK(comp[3].xs == std::vector<int>{3});
  CHECK(comp[3].ys == std::vector<int>{1});
  CHECK(comp[4].xs.empty());
  CHECK(comp[4].ys == std::vector<int>{0});
}

TEST_CASE("induce keeps maps consistent") {
  BiGraph g = c6_pendant();
  auto sub = induce(g, {0, 2, 3}, {0, 2});
  CHECK(sub.graph.x_count() == 3);
  CHECK(sub.graph.y_count() == 2);
  for (int i = 0; i < sub.graph.x_count(); ++i)
    for (int j : sub.graph.adj_x(i))
      CHECK(g.has_edge(sub.x_to_parent[i], sub.y_to_parent[j]));
  CHECK(sub.x_from_parent[1] == -1);
  CHECK(sub.x_to_parent[sub.x_from_parent[3]] == 3);
}

TEST_CASE("graph json round trip") {
  for (const BiGraph& g : {c6_pendant(), k33(), star3(), BiGraph::build(2, 0, {})}) {
    BiGraph back = graph_from_json(graph_to_json(g));
    CHECK(back.x_count() == g.x_count());
    CHECK(back.y_count() == g.y_count());
    CHECK(back.edge_list() == g.edge_list());
  }
}

TEST_CASE("graph text round trip with comments") {
  BiGraph g = graph_from_text("# header\n3 2\n0 0\n1 0\n# mid\n1 1\n2 1\n");
  CHECK(g.x_count() == 3);
  CHECK(g.edge_list() == caterpillar().edge_list());
  BiGraph back = graph_from_text(graph_to_text(g));
  CHECK(back.edge_list() == g.edge_list());
}

TEST_CASE("graph_from_string sniffs the format") {
  std::string j = graph_to_json(k23()).dump();
  CHECK(graph_from_string("  \n" + j).edge_count() == 6);
  CHECK(graph_from_string("1 1\n0 0\n").edge_count() == 1);
}

TEST_CASE("parse errors carry errc::parse") {
  for (const std::string& bad :
       {std::string{"{"}, std::string{"{\"x_count\": 1}"}, std::string{"1\n0 0\n"},
        std::string{"2 2\n0 zero\n"}, std::string{"{\"x_count\": 1, \"y_count\": 1, \"edges\": [[0, 9]]}"}}) {
    try {
      graph_from_string(bad);
      CHECK_MESSAGE(false, bad);
    } catch (const error& e) {
      CHECK(e.kind() == errc::parse);
    }
  }
}
