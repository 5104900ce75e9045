#include "xcover/deficiency.hpp"

#include <algorithm>
#include <climits>
#include <string>

namespace xcover {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Incremental subset state for the deficiency search: per-Y counts of
// neighbors inside the current subset, current size and |Lambda|.
struct DefState {
  const BiGraph& g;
  std::vector<int> hits;  // per Y vertex, #neighbors in the subset
  int size = 0, lam = 0;

  explicit DefState(const BiGraph& gg) : g(gg), hits(gg.y_count(), 0) {}
  void add(int x) {
    ++size;
    for (int j : g.adj_x(x))
      if (++hits[j] == 2) ++lam;
  }
  void drop(int x) {
    --size;
    for (int j : g.adj_x(x))
      if (--hits[j] == 1) --lam;
  }
  int value() const { return size - lam; }
};

// Best achievable value over completions that are free on indices [idx, n).
// The bound adds one per undecided vertex (adding a vertex raises |S| by one
// and never lowers |Lambda|), which keeps the search exact.
int best_value(DefState& st, int idx, int n, int best_so_far) {
  if (idx == n) return std::max(st.value(), best_so_far);
  if (st.value() + (n - idx) <= best_so_far) return best_so_far;  // cannot strictly improve
  st.add(idx);
  int b = best_value(st, idx + 1, n, best_so_far);
  st.drop(idx);
  return best_value(st, idx + 1, n, std::max(best_so_far, b));
}

// Can some completion free on [idx, n) reach value >= target?
bool value_reachable(DefState& st, int idx, int n, int target) {
  if (st.value() + (n - idx) < target) return false;
  if (idx == n) return st.value() >= target;
  st.add(idx);
  bool ok = value_reachable(st, idx + 1, n, target);
  st.drop(idx);
  return ok || value_reachable(st, idx + 1, n, target);
}

}  // namespace

std::vector<int> lambda_set(const BiGraph& g, const std::vector<int>& s) {
  std::vector<char> in(g.x_count(), 0);
  for (int x : s) {
    if (x < 0 || x >= g.x_count())
      fail(errc::argument, "lambda_set: x index " + std::to_string(x) + " out of range");
    in[x] = 1;
  }
  std::vector<int> out;
  for (int j = 0; j < g.y_count(); ++j) {
    int c = 0;
    for (int i : g.adj_y(j))
      if (in[i] && ++c == 2) break;
    if (c >= 2) out.push_back(j);
  }
  return out;
}

DeficiencyCertificate deficiency_of(const BiGraph& g, const std::vector<int>& s) {
  DeficiencyCertificate cert;
  cert.subset = sorted_unique(s);
  cert.lambda = lambda_set(g, cert.subset);
  cert.value = static_cast<int>(cert.subset.size()) - static_cast<int>(cert.lambda.size());
  return cert;
}

DeficiencyCertificate max_deficiency(const BiGraph& g, int cap) {
  const int n = g.x_count();
  if (n > cap)
    fail(errc::cap, "instance too large for exact deficiency (x_count=" + std::to_string(n) +
                        ", cap=" + std::to_string(cap) + ")");
  if (n == 0) return deficiency_of(g, {});

  DefState st(g);
  const int best = best_value(st, 0, n, INT_MIN);

  // Lexicographically smallest maximizer, built element by element. Sorted
  // index lists compare with the shorter-prefix-first rule, so once the
  // committed prefix already attains the maximum it is the answer.
  std::vector<int> chosen;
  int low = 0;
  while (st.value() != best) {
    bool extended = false;
    for (int a = low; a < n; ++a) {
      st.add(a);
      if (value_reachable(st, a + 1, n, best)) {
        chosen.push_back(a);
        low = a + 1;
        extended = true;
        break;
      }
      st.drop(a);
    }
    XCOVER_ASSERT(extended, "deficiency maximizer construction stalled");
  }
  return deficiency_of(g, chosen);
}

namespace {

// Max independent set machinery on the conflict graph over X, where two X
// vertices conflict iff they share a Y neighbor. Bitmask-based; the cap
// keeps n within one word.
struct ConflictGraph {
  int n;
  std::vector<uint64_t> adj;

  explicit ConflictGraph(const BiGraph& g) : n(g.x_count()), adj(g.x_count(), 0) {
    for (int j = 0; j < g.y_count(); ++j) {
      const auto& nb = g.adj_y(j);
      for (size_t a = 0; a < nb.size(); ++a)
        for (size_t b = a + 1; b < nb.size(); ++b) {
          adj[nb[a]] |= uint64_t{1} << nb[b];
          adj[nb[b]] |= uint64_t{1} << nb[a];
        }
    }
  }
};

int mis_best(const ConflictGraph& cg, uint64_t cand, int size, int best) {
  if (size + __builtin_popcountll(cand) <= best) return best;
  if (cand == 0) return size;
  int v = __builtin_ctzll(cand);
  uint64_t bit = uint64_t{1} << v;
  best = mis_best(cg, cand & ~(cg.adj[v] | bit), size + 1, best);
  return mis_best(cg, cand & ~bit, size, best);
}

bool mis_reachable(const ConflictGraph& cg, uint64_t cand, int size, int target) {
  if (size >= target) return true;
  if (size + __builtin_popcountll(cand) < target) return false;
  int v = __builtin_ctzll(cand);
  uint64_t bit = uint64_t{1} << v;
  if (mis_reachable(cg, cand & ~(cg.adj[v] | bit), size + 1, target)) return true;
  return mis_reachable(cg, cand & ~bit, size, target);
}

}  // namespace

LambdaIndependentSet alpha_lambda(const BiGraph& g, int cap) {
  const int n = g.x_count();
  if (cap > 62) fail(errc::argument, "alpha cap must be at most 62");
  if (n > cap)
    fail(errc::cap, "instance too large for exact alpha (x_count=" + std::to_string(n) +
                        ", cap=" + std::to_string(cap) + ")");
  LambdaIndependentSet out;
  if (n == 0) return out;

  ConflictGraph cg(g);
  const uint64_t all = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  const int best = mis_best(cg, all, 0, 0);

  // Lexicographically smallest maximum independent set; same greedy scheme
  // as the deficiency maximizer.
  uint64_t cand = all;
  int size = 0;
  while (size < best) {
    XCOVER_ASSERT(cand != 0, "alpha maximizer construction stalled");
    int v = __builtin_ctzll(cand);
    uint64_t bit = uint64_t{1} << v;
    if (mis_reachable(cg, cand & ~(cg.adj[v] | bit), size + 1, best)) {
      out.subset.push_back(v);
      ++size;
      cand &= ~(cg.adj[v] | bit);
    } else {
      cand &= ~bit;
    }
  }
  return out;
}

DeficiencyCertificate certificate_for(const BiGraph& g, const LambdaIndependentSet& s) {
  DeficiencyCertificate cert = deficiency_of(g, s.subset);
  XCOVER_ASSERT(cert.lambda.empty(), "set is not Lambda-independent");
  return cert;
}

}  // namespace xcover
