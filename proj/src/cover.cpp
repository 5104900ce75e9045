#include "xcover/cover.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <unordered_map>

namespace xcover {

bool is_valid_path(const BiGraph& g, const Path& p, std::string* why) {
  auto bad = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (p.vertices.empty()) return bad("path is empty");
  for (VertexRef v : p.vertices)
    if (!g.contains(v)) return bad("vertex " + to_string(v) + " out of range");
  for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    VertexRef a = p.vertices[i], b = p.vertices[i + 1];
    if (a.side == b.side)
      return bad("vertices " + to_string(a) + "," + to_string(b) + " do not alternate sides");
    if (!g.adjacent(a, b))
      return bad("vertices " + to_string(a) + "," + to_string(b) + " not adjacent");
  }
  auto seen = p.vertices;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    return bad("path repeats a vertex");
  return true;
}

Path trim_y_endpoints(Path p) {
  auto& v = p.vertices;
  while (!v.empty() && v.front().side == Side::Y) v.erase(v.begin());
  while (!v.empty() && v.back().side == Side::Y) v.pop_back();
  return p;
}

Verdict verify_cover(const BiGraph& g, const PathXCover& c) {
  Verdict out;
  auto flag = [&](const std::string& m) {
    out.valid = false;
    out.violations.push_back(m);
  };

  for (size_t p = 0; p < c.paths.size(); ++p) {
    std::string why;
    if (!is_valid_path(g, c.paths[p], &why)) flag("path " + std::to_string(p) + ": " + why);
  }

  std::vector<int> owner_x(g.x_count(), -1), owner_y(g.y_count(), -1);
  for (size_t p = 0; p < c.paths.size(); ++p) {
    for (VertexRef v : c.paths[p].vertices) {
      if (!g.contains(v)) continue;  // already flagged above
      int& owner = v.side == Side::X ? owner_x[v.index] : owner_y[v.index];
      if (owner >= 0 && owner != static_cast<int>(p))
        flag("vertex " + to_string(v) + " appears in paths " + std::to_string(owner) + " and " +
             std::to_string(p));
      owner = static_cast<int>(p);
    }
  }

  for (int i = 0; i < g.x_count(); ++i)
    if (owner_x[i] < 0) flag("vertex x" + std::to_string(i) + " not covered");

  return out;
}

Verdict certify(const BiGraph& g, const PathXCover& c, const DeficiencyCertificate& cert) {
  Verdict out = verify_cover(g, c);
  auto flag = [&](const std::string& m) {
    out.valid = false;
    out.violations.push_back(m);
  };

  DeficiencyCertificate fresh = deficiency_of(g, cert.subset);
  if (fresh.lambda != cert.lambda) flag("certificate lambda set does not match the graph");
  if (fresh.value != cert.value)
    flag("certificate value " + std::to_string(cert.value) + " should be " +
         std::to_string(fresh.value));
  if (static_cast<int>(c.paths.size()) > cert.value)
    flag("cover uses " + std::to_string(c.paths.size()) + " paths, certificate allows " +
         std::to_string(cert.value));
  return out;
}

namespace {

struct PathMasks {
  uint32_t x = 0, y = 0;
};

PathMasks masks_of(const Path& p) {
  PathMasks m;
  for (VertexRef v : p.vertices)
    (v.side == Side::X ? m.x : m.y) |= uint32_t{1} << v.index;
  return m;
}

// Arm-growth enumeration: prepend onto the front in all ways (with an
// explicit branch that freezes the front), then append onto the back until
// stuck. Maximality of the front is re-checked against the finished path,
// and each undirected path is kept in one orientation only.
struct PathEnum {
  const BiGraph& g;
  uint32_t bx, by;
  const std::function<bool(const Path&)>& cb;
  std::deque<VertexRef> path;
  PathMasks on;

  bool blocked(VertexRef v) const {
    uint32_t bit = uint32_t{1} << v.index;
    return v.side == Side::X ? ((bx | on.x) & bit) != 0 : ((by | on.y) & bit) != 0;
  }

  bool stuck(VertexRef end) const {
    for (VertexRef nb : g.neighbors(end))
      if (!blocked(nb)) return false;
    return true;
  }

  void push(VertexRef v, bool front) {
    (v.side == Side::X ? on.x : on.y) |= uint32_t{1} << v.index;
    front ? path.push_front(v) : path.push_back(v);
  }
  void pop(bool front) {
    VertexRef v = front ? path.front() : path.back();
    (v.side == Side::X ? on.x : on.y) &= ~(uint32_t{1} << v.index);
    front ? path.pop_front() : path.pop_back();
  }

  bool emit() {
    if (!stuck(path.front())) return true;  // not maximal; the same vertex set
                                            // reappears with a longer front arm
    std::vector<VertexRef> fwd(path.begin(), path.end());
    if (std::lexicographical_compare(fwd.rbegin(), fwd.rend(), fwd.begin(), fwd.end()))
      return true;  // reversed orientation is canonical; skip this one
    Path p;
    p.vertices = std::move(fwd);
    return cb(p);
  }

  bool grow_back() {
    bool any = false;
    for (VertexRef nb : g.neighbors(path.back())) {
      if (blocked(nb)) continue;
      any = true;
      push(nb, false);
      bool keep = grow_back();
      pop(false);
      if (!keep) return false;
    }
    return any ? true : emit();
  }

  bool grow_front() {
    for (VertexRef nb : g.neighbors(path.front())) {
      if (blocked(nb)) continue;
      push(nb, true);
      bool keep = grow_front();
      pop(true);
      if (!keep) return false;
    }
    return grow_back();  // freeze the front here; emit() re-checks maximality
  }
};

}  // namespace

void enumerate_maximal_paths(const BiGraph& g, int x0, uint32_t x_blocked, uint32_t y_blocked,
                             const std::function<bool(const Path&)>& cb) {
  PathEnum en{g, x_blocked, y_blocked, cb, {}, {}};
  en.push(xref(x0), false);
  en.grow_front();
}

namespace {

struct MemoEntry {
  int k = INT_MAX;
  Path first;  // a best first path from this state
};

struct OracleSearch {
  const BiGraph& g;
  uint32_t full_x;
  std::unordered_map<uint64_t, MemoEntry> memo;

  uint64_t key(uint32_t cx, uint32_t uy) const {
    return static_cast<uint64_t>(cx) | (static_cast<uint64_t>(uy) << g.x_count());
  }

  int rec(uint32_t cx, uint32_t uy) {
    if (cx == full_x) return 0;
    auto it = memo.find(key(cx, uy));
    if (it != memo.end()) return it->second.k;

    int x0 = __builtin_ctz(~cx & full_x);
    MemoEntry e;
    // Restricting to maximal paths is exact: a covering path can always be
    // extended into other paths' territory by splicing off the tail of the
    // path it runs into, which never increases the path count.
    enumerate_maximal_paths(g, x0, cx, uy, [&](const Path& p) {
      PathMasks m = masks_of(p);
      int sub = rec(cx | m.x, uy | m.y);
      if (sub != INT_MAX && 1 + sub < e.k) {
        e.k = 1 + sub;
        e.first = p;
      }
      return e.k > 1;  // one path is already optimal from any uncovered state
    });
    XCOVER_ASSERT(e.k != INT_MAX, "oracle found no path through an uncovered vertex");
    memo.emplace(key(cx, uy), e);
    return e.k;
  }
};

}  // namespace

OracleResult min_cover_oracle(const BiGraph& g, int vertex_cap) {
  if (g.vertex_count() > vertex_cap)
    fail(errc::cap, "instance too large for the exact cover oracle (" +
                        std::to_string(g.vertex_count()) + " vertices, cap=" +
                        std::to_string(vertex_cap) + ")");
  OracleResult out;
  if (g.x_count() == 0) return out;

  OracleSearch s{g, (uint32_t{1} << g.x_count()) - 1, {}};
  out.k = s.rec(0, 0);

  uint32_t cx = 0, uy = 0;
  while (cx != s.full_x) {
    const MemoEntry& e = s.memo.at(s.key(cx, uy));
    out.witness.paths.push_back(e.first);
    PathMasks m = masks_of(e.first);
    cx |= m.x;
    uy |= m.y;
  }
  XCOVER_ASSERT(static_cast<int>(out.witness.paths.size()) == out.k,
                "oracle witness does not match its own count");
  XCOVER_ASSERT(verify_cover(g, out.witness).valid, "oracle witness is not a valid cover");
  return out;
}

}  // namespace xcover
