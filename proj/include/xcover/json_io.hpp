#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "xcover/bigraph.hpp"
#include "xcover/cover.hpp"
#include "xcover/cycles.hpp"
#include "xcover/deficiency.hpp"
#include "xcover/girth_solver.hpp"
#include "xcover/hypergraph.hpp"

namespace xcover {

// Serialization uses ordered JSON throughout so identical inputs print
// byte-identically. Parsers throw errc::parse on malformed input.

nlohmann::ordered_json graph_to_json(const BiGraph& g);
std::string graph_to_text(const BiGraph& g);
BiGraph graph_from_json(const nlohmann::json& j);
BiGraph graph_from_text(const std::string& text);

// Accepts either format: JSON when the first non-space byte is '{',
// the "nx ny" edge-list text otherwise.
BiGraph graph_from_string(const std::string& content);

nlohmann::ordered_json cover_to_json(const PathXCover& c);
PathXCover cover_from_json(const nlohmann::json& j);

nlohmann::ordered_json certificate_to_json(const DeficiencyCertificate& c);
DeficiencyCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::ordered_json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);
Hypergraph hypergraph_from_string(const std::string& content);

nlohmann::ordered_json packing_to_json(const CyclePacking& p);
nlohmann::ordered_json audit_to_json(const AuditReport& r);

// Whole-stream / file readers; a path of "-" reads standard input.
std::string read_stream(std::istream& in);
std::string read_file_or_stdin(const std::string& path);

}  // namespace xcover
