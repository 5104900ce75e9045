#include "xcover/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace xcover {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json vertex_to_json(const VertexRef& v) {
  return ordered_json::array({v.side == Side::X ? "X" : "Y", v.index});
}

VertexRef vertex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_number_integer())
    fail(errc::parse, "vertex must be a [\"X\"|\"Y\", index] pair");
  std::string side = j[0].get<std::string>();
  if (side != "X" && side != "Y") fail(errc::parse, "vertex side must be \"X\" or \"Y\"");
  return {side == "X" ? Side::X : Side::Y, j[1].get<int>()};
}

json parse_or_throw(const std::string& content) {
  json j = json::parse(content, nullptr, false);
  if (j.is_discarded()) fail(errc::parse, "malformed JSON");
  return j;
}

int require_int(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    fail(errc::parse, std::string("missing or non-integer field \"") + field + "\"");
  return j[field].get<int>();
}

const json& require_array(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array())
    fail(errc::parse, std::string("missing or non-array field \"") + field + "\"");
  return j[field];
}

std::vector<int> int_vector(const json& arr, const char* what) {
  std::vector<int> out;
  for (const auto& e : arr) {
    if (!e.is_number_integer()) fail(errc::parse, std::string(what) + " must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

ordered_json graph_to_json(const BiGraph& g) {
  ordered_json j;
  j["x_count"] = g.x_count();
  j["y_count"] = g.y_count();
  ordered_json edges = ordered_json::array();
  for (const auto& [x, y] : g.edge_list()) edges.push_back(ordered_json::array({x, y}));
  j["edges"] = std::move(edges);
  return j;
}

std::string graph_to_text(const BiGraph& g) {
  std::ostringstream out;
  out << g.x_count() << ' ' << g.y_count() << '\n';
  for (const auto& [x, y] : g.edge_list()) out << x << ' ' << y << '\n';
  return out.str();
}

BiGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(errc::parse, "graph JSON must be an object");
  int nx = require_int(j, "x_count"), ny = require_int(j, "y_count");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : require_array(j, "edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      fail(errc::parse, "each edge must be an [x, y] index pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  try {
    return BiGraph::build(nx, ny, edges);
  } catch (const error& e) {
    fail(errc::parse, std::string("invalid graph: ") + e.what());
  }
}

BiGraph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int nx = -1, ny = -1;
  bool have_header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    long long a, b;
    if (!(ls >> a)) continue;  // blank or comment-only line
    std::string where = "line " + std::to_string(lineno);
    if (!(ls >> b)) fail(errc::parse, where + ": expected two integers");
    std::string rest;
    if (ls >> rest) fail(errc::parse, where + ": trailing content \"" + rest + "\"");
    if (!have_header) {
      nx = static_cast<int>(a);
      ny = static_cast<int>(b);
      have_header = true;
    } else {
      edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  if (!have_header) fail(errc::parse, "missing \"nx ny\" header line");
  try {
    return BiGraph::build(nx, ny, edges);
  } catch (const error& e) {
    fail(errc::parse, std::string("invalid graph: ") + e.what());
  }
}

BiGraph graph_from_string(const std::string& content) {
  for (char ch : content) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{') return graph_from_json(parse_or_throw(content));
    return graph_from_text(content);
  }
  fail(errc::parse, "empty input");
}

ordered_json cover_to_json(const PathXCover& c) {
  ordered_json paths = ordered_json::array();
  for (const Path& p : c.paths) {
    ordered_json path = ordered_json::array();
    for (const VertexRef& v : p.vertices) path.push_back(vertex_to_json(v));
    paths.push_back(std::move(path));
  }
  return ordered_json{{"paths", std::move(paths)}};
}

PathXCover cover_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(errc::parse, "cover JSON must be an object");
  PathXCover c;
  for (const auto& pj : require_array(j, "paths")) {
    if (!pj.is_array()) fail(errc::parse, "each path must be an array of vertices");
    Path p;
    for (const auto& vj : pj) p.vertices.push_back(vertex_from_json(vj));
    c.paths.push_back(std::move(p));
  }
  return c;
}

ordered_json certificate_to_json(const DeficiencyCertificate& c) {
  return ordered_json{{"subset", c.subset}, {"lambda", c.lambda}, {"value", c.value}};
}

DeficiencyCertificate certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(errc::parse, "certificate JSON must be an object");
  DeficiencyCertificate c;
  c.subset = int_vector(require_array(j, "subset"), "subset");
  c.lambda = int_vector(require_array(j, "lambda"), "lambda");
  c.value = require_int(j, "value");
  return c;
}

ordered_json hypergraph_to_json(const Hypergraph& h) {
  ordered_json edges = ordered_json::array();
  for (const auto& e : h.edges()) edges.push_back(e);
  return ordered_json{{"vertex_count", h.vertex_count()}, {"edges", std::move(edges)}};
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(errc::parse, "hypergraph JSON must be an object");
  int n = require_int(j, "vertex_count");
  std::vector<std::vector<int>> edges;
  for (const auto& e : require_array(j, "edges")) {
    if (!e.is_array()) fail(errc::parse, "each hyperedge must be an array of vertices");
    edges.push_back(int_vector(e, "hyperedge"));
  }
  try {
    return Hypergraph::build(n, std::move(edges));
  } catch (const error& e) {
    fail(errc::parse, std::string("invalid hypergraph: ") + e.what());
  }
}

Hypergraph hypergraph_from_string(const std::string& content) {
  return hypergraph_from_json(parse_or_throw(content));
}

ordered_json packing_to_json(const CyclePacking& p) {
  ordered_json cycles = ordered_json::array();
  for (const Cycle& c : p.cycles) {
    ordered_json cj = ordered_json::array();
    for (const VertexRef& v : c.vertices()) cj.push_back(vertex_to_json(v));
    cycles.push_back(std::move(cj));
  }
  return ordered_json{{"cycles", std::move(cycles)}};
}

ordered_json audit_to_json(const AuditReport& r) {
  ordered_json events = ordered_json::array();
  for (const AuditEvent& e : r.events) {
    events.push_back(ordered_json{{"u", e.u},
                                  {"v", e.v},
                                  {"cycle_u", e.cycle_u},
                                  {"cycle_v", e.cycle_v},
                                  {"pr", "1/" + std::to_string(e.pr_den)},
                                  {"x_value", e.x_value},
                                  {"type1_count", e.type1_count},
                                  {"type1_bound", e.type1_bound},
                                  {"type2_count", e.type2_count},
                                  {"type2_bound", e.type2_bound},
                                  {"product", e.product_value},
                                  {"margin", e.margin},
                                  {"holds", e.holds}});
  }
  return ordered_json{{"d", r.d},
                      {"event_count", r.events.size()},
                      {"all_hold", r.all_hold},
                      {"counts_within_bounds", r.counts_within_bounds},
                      {"events", std::move(events)}};
}

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string read_file_or_stdin(const std::string& path) {
  if (path == "-") return read_stream(std::cin);
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(errc::parse, "cannot open " + path);
  return read_stream(f);
}

}  // namespace xcover
