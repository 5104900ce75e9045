#pragma once

#include <functional>
#include <string>
#include <vector>

#include "xcover/bigraph.hpp"
#include "xcover/deficiency.hpp"

namespace xcover {

// A path in a bigraph: at least one vertex, sides alternate, consecutive
// vertices adjacent, no vertex repeated.
struct Path {
  std::vector<VertexRef> vertices;
};

// A family of pairwise vertex-disjoint paths whose union covers X.
struct PathXCover {
  std::vector<Path> paths;
};

struct Verdict {
  bool valid = true;
  std::vector<std::string> violations;
};

// True with an empty violation list, or false with one line per violation.
Verdict verify_cover(const BiGraph& g, const PathXCover& c);

// verify_cover plus: the certificate is internally consistent against g and
// the cover uses at most cert.value paths.
Verdict certify(const BiGraph& g, const PathXCover& c, const DeficiencyCertificate& cert);

bool is_valid_path(const BiGraph& g, const Path& p, std::string* why = nullptr);

// Drops leading/trailing Y vertices; may leave an empty path.
Path trim_y_endpoints(Path p);

struct OracleResult {
  int k = 0;
  PathXCover witness;
};

// Exact minimum number of paths in a path X-cover, with a witness. Branches
// on the lowest-index uncovered X vertex over all maximal paths through it,
// memoized on (covered-X bitmask, used-Y bitmask). Throws errc::cap when
// x_count + y_count exceeds the cap.
OracleResult min_cover_oracle(const BiGraph& g, int vertex_cap = 18);

// Enumerates the maximal paths through x0 that avoid blocked vertices (bit i
// of x_blocked / y_blocked). Maximal: neither endpoint can be extended with
// an unblocked, unused vertex. Each path is reported once, in a canonical
// orientation; return false from the callback to stop early.
void enumerate_maximal_paths(const BiGraph& g, int x0, uint32_t x_blocked, uint32_t y_blocked,
                             const std::function<bool(const Path&)>& cb);

}  // namespace xcover
