#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "test_instances.hpp"
#include "xcover/cover.hpp"
#include "xcover/cubic_solver.hpp"
#include "xcover/deficiency.hpp"

using namespace xcover;
using namespace xcover::testing;

namespace {

void check_solution(const BiGraph& g) {
  auto [cover, witness] = solve_cubic(g);
  CHECK(verify_cover(g, cover).valid);
  CHECK(cover.paths.size() == witness.subset.size());
  CHECK(naive_lambda(g, witness.subset).empty());

  // The cubic cover spans every vertex, not just X.
  std::set<VertexRef> covered;
  for (const Path& p : cover.paths)
    for (VertexRef v : p.vertices) covered.insert(v);
  CHECK(static_cast<int>(covered.size()) == g.vertex_count());

  if (g.x_count() <= 16) {
    LambdaIndependentSet best = alpha_lambda(g);
    CHECK(cover.paths.size() <= best.subset.size());
  }
}

}  // namespace

TEST_CASE("K33 in one path") {
  auto [cover, witness] = solve_cubic(k33());
  REQUIRE(cover.paths.size() == 1);
  CHECK(cover.paths[0].vertices.size() == 6);
  CHECK(witness.subset.size() == 1);
  check_solution(k33());
}

TEST_CASE("Q3 in one path") {
  auto [cover, witness] = solve_cubic(q3());
  REQUIRE(cover.paths.size() == 1);
  CHECK(cover.paths[0].vertices.size() == 8);
  check_solution(q3());
}

TEST_CASE("rejects non-3-regular graphs") {
  for (const BiGraph& g : {c6(), k23(), star3(), BiGraph::build(0, 0, {})}) {
    try {
      solve_cubic(g);
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.kind() == errc::precondition);
    }
  }
}

TEST_CASE("random 3-regular instances") {
  for (uint64_t seed = 0; seed < 120; ++seed) {
    int n = 4 + static_cast<int>(seed % 13);
    BiGraph g = gen_random_regular(n, 3, seed);
    REQUIRE(is_regular(g) == 3);
    check_solution(g);
  }
}

TEST_CASE("trace names each merge step") {
  std::vector<std::string> trace;
  solve_cubic(q3(), &trace);
  CHECK(!trace.empty());
}
