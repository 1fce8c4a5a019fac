#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "mmfvs/annotated.hpp"
#include "mmfvs/graph.hpp"

namespace mmfvs::cli {

using nlohmann::json;

// All vertex ids in JSON documents are 1-based: internal id v is written v+1.

// Parses text as JSON, turning syntax errors into InputError with line/column.
json parse_json(const std::string& text);
json read_json_file(const std::filesystem::path& path);

json vertex_list(const VertexSet& s);
VertexSet vertex_set_from_json(const json& j, const char* field);

// {"n": N, "edges": [[u, v], ...]} with one pair per edge unit. Requires
// contiguous ids.
json graph_to_json(const MultiGraph& g);
// Accepts that object, a bare edge list, or a path to a graph file resolved
// against `base`.
MultiGraph graph_from_json(const json& j, const std::filesystem::path& base);

// {"witness": [...], "certificates": {"v": [cycle]}}.
json witness_to_json(const Witness& w);
Witness witness_from_json(const json& j);

struct InstanceDoc {
  MultiGraph graph;
  VertexSet s;
  VertexSet f;
  int k = 0;
};

// {"graph": ..., "S": [...], "F": [...], "k": K}. F and k are optional.
InstanceDoc instance_from_json(const json& j, const std::filesystem::path& base);
json instance_to_json(const MultiGraph& g, const VertexSet& s, const VertexSet& f, int k);

// FNV-1a over the file bytes, as "fnv1a64:<hex>".
std::string file_digest(const std::filesystem::path& path);

}  // namespace mmfvs::cli
