#include "xcover/generators.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <utility>

namespace xcover {

uint64_t uniform_below(std::mt19937_64& rng, uint64_t n) {
  XCOVER_ASSERT(n > 0, "uniform_below needs n > 0");
  const uint64_t limit = std::numeric_limits<uint64_t>::max() -
                         std::numeric_limits<uint64_t>::max() % n;
  for (;;) {
    uint64_t r = rng();
    if (r < limit) return r % n;
  }
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

BiGraph gen_fam(int n, int k) {
  if (n < 1 || k < 1 || k > n) fail(errc::argument, "fam(n,k) needs 1 <= k <= n");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i < k || j < k) edges.emplace_back(i, j);
  return BiGraph::build(n, n, edges);
}

BiGraph gen_cycle(int length) {
  if (length < 4 || length % 2 != 0) fail(errc::argument, "cycle length must be even and >= 4");
  int m = length / 2;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(i, i);
    edges.emplace_back(i, (i + m - 1) % m);
  }
  return BiGraph::build(m, m, edges);
}

BiGraph gen_random_regular(int n, int d, uint64_t seed) {
  if (n < 1 || d < 1 || d > n) fail(errc::argument, "random regular needs 1 <= d <= n");
  std::mt19937_64 rng(seed);
  const int stubs = n * d;
  std::vector<int> perm(stubs);
  for (int attempt = 0; attempt < 2000; ++attempt) {
    // pair X stub s with Y stub perm[s]; reject multigraphs
    for (int s = 0; s < stubs; ++s) perm[s] = s;
    for (int s = stubs - 1; s > 0; --s)
      std::swap(perm[s], perm[uniform_below(rng, static_cast<uint64_t>(s) + 1)]);
    std::set<std::pair<int, int>> seen;
    bool simple = true;
    for (int s = 0; s < stubs && simple; ++s)
      simple = seen.emplace(s / d, perm[s] / d).second;
    if (!simple) continue;
    std::vector<std::pair<int, int>> edges(seen.begin(), seen.end());
    return BiGraph::build(n, n, edges);
  }
  fail(errc::generation, "random regular generator failed to produce a simple graph (n=" +
                             std::to_string(n) + ", d=" + std::to_string(d) + ")");
}

BiGraph gen_random_forest(int n, uint64_t seed) {
  if (n < 0) fail(errc::argument, "forest size must be non-negative");
  std::mt19937_64 rng(seed);
  // Attach each vertex to a random earlier one (opposite side) or start a
  // fresh component; the result is acyclic by construction.
  std::vector<Side> side(n);
  std::vector<int> link(n, -1);
  for (int v = 0; v < n; ++v) {
    bool fresh = v == 0 || uniform_below(rng, 6) == 0;
    if (fresh) {
      side[v] = uniform_below(rng, 2) == 0 ? Side::X : Side::Y;
    } else {
      link[v] = static_cast<int>(uniform_below(rng, static_cast<uint64_t>(v)));
      side[v] = side[link[v]] == Side::X ? Side::Y : Side::X;
    }
  }
  std::vector<int> idx(n);
  int nx = 0, ny = 0;
  for (int v = 0; v < n; ++v) idx[v] = side[v] == Side::X ? nx++ : ny++;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    if (link[v] < 0) continue;
    int u = link[v];
    if (side[v] == Side::X)
      edges.emplace_back(idx[v], idx[u]);
    else
      edges.emplace_back(idx[u], idx[v]);
  }
  return BiGraph::build(nx, ny, edges);
}

BiGraph gen_random_bigraph(int nx, int ny, double p, uint64_t seed) {
  if (nx < 0 || ny < 0) fail(errc::argument, "vertex counts must be non-negative");
  if (p < 0.0 || p > 1.0) fail(errc::argument, "edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      if (uniform_unit(rng) < p) edges.emplace_back(i, j);
  return BiGraph::build(nx, ny, edges);
}

}  // namespace xcover
