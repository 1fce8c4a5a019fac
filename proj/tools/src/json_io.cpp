#include "mmfvs_cli/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "mmfvs/errors.hpp"
#include "mmfvs/graph_io.hpp"

namespace mmfvs::cli {

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

VertexId external_id(const json& v, const char* field) {
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw InputError(std::string(field) + ": vertex ids must be positive integers");
  return static_cast<VertexId>(v.get<long long>() - 1);
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (const auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw InputError("malformed JSON: " + what, line, column);
  }
}

json read_json_file(const std::filesystem::path& path) {
  try {
    return parse_json(slurp(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

json vertex_list(const VertexSet& s) {
  json out = json::array();
  for (VertexId v : s) out.push_back(v + 1);
  return out;
}

VertexSet vertex_set_from_json(const json& j, const char* field) {
  if (!j.is_array()) throw InputError(std::string(field) + ": expected an array of vertex ids");
  VertexSet out;
  for (const json& v : j) out.insert(external_id(v, field));
  return out;
}

json graph_to_json(const MultiGraph& g) {
  if (g.num_vertices() != g.id_bound()) throw std::logic_error("graph_to_json: vertex ids are not contiguous");
  json edges = json::array();
  for (VertexId v : g.vertices()) {
    for (int l = 0; l < g.self_loops(v); ++l) edges.push_back({v + 1, v + 1});
    for (auto [x, m] : g.neighbors(v))
      if (v < x)
        for (int c = 0; c < m; ++c) edges.push_back({v + 1, x + 1});
  }
  return {{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

MultiGraph graph_from_json(const json& j, const std::filesystem::path& base) {
  if (j.is_string()) {
    std::filesystem::path p = j.get<std::string>();
    if (p.is_relative()) p = base / p;
    return read_graph_file(p.string());
  }
  const json* edges = &j;
  long long n = -1;
  if (j.is_object()) {
    if (!j.contains("edges")) throw InputError("graph: object needs an \"edges\" list");
    edges = &j.at("edges");
    if (j.contains("n")) {
      if (!j.at("n").is_number_integer() || j.at("n").get<long long>() < 0)
        throw InputError("graph: n must be a non-negative integer");
      n = j.at("n").get<long long>();
    }
  }
  if (!edges->is_array()) throw InputError("graph: expected a path, an edge list or {\"n\", \"edges\"}");
  std::vector<std::pair<VertexId, VertexId>> pairs;
  long long top = 0;
  for (const json& e : *edges) {
    if (!e.is_array() || e.size() != 2) throw InputError("graph: each edge is a pair [u, v]");
    const VertexId a = external_id(e[0], "graph"), b = external_id(e[1], "graph");
    top = std::max<long long>(top, std::max(a, b) + 1);
    pairs.emplace_back(a, b);
  }
  if (n < 0) n = top;
  if (top > n) throw InputError("graph: edge endpoint exceeds n");
  MultiGraph g(static_cast<std::size_t>(n));
  for (auto [a, b] : pairs) g.add_edge(a, b);
  return g;
}

json witness_to_json(const Witness& w) {
  json certs = json::object();
  for (const auto& [v, cycle] : w.certificates) {
    json c = json::array();
    for (VertexId x : cycle) c.push_back(x + 1);
    certs[std::to_string(v + 1)] = std::move(c);
  }
  return {{"witness", vertex_list(w.solution)}, {"certificates", std::move(certs)}};
}

Witness witness_from_json(const json& j) {
  if (!j.is_object() || !j.contains("witness")) throw InputError("witness document needs a \"witness\" list");
  Witness w;
  w.solution = vertex_set_from_json(j.at("witness"), "witness");
  if (j.contains("certificates")) {
    const json& certs = j.at("certificates");
    if (!certs.is_object()) throw InputError("certificates: expected an object");
    for (const auto& [key, cycle] : certs.items()) {
      long long id = 0;
      try {
        std::size_t used = 0;
        id = std::stoll(key, &used);
        if (used != key.size()) id = 0;
      } catch (const std::exception&) {
        id = 0;
      }
      if (id < 1) throw InputError("certificates: key \"" + key + "\" is not a vertex id");
      if (!cycle.is_array()) throw InputError("certificates: cycle for " + key + " is not a list");
      Cycle c;
      for (const json& x : cycle) c.push_back(external_id(x, "certificates"));
      w.certificates[static_cast<VertexId>(id - 1)] = std::move(c);
    }
  }
  return w;
}

InstanceDoc instance_from_json(const json& j, const std::filesystem::path& base) {
  if (!j.is_object() || !j.contains("graph")) throw InputError("instance: needs a \"graph\" field");
  InstanceDoc doc;
  doc.graph = graph_from_json(j.at("graph"), base);
  if (j.contains("S")) doc.s = vertex_set_from_json(j.at("S"), "S");
  if (j.contains("F")) doc.f = vertex_set_from_json(j.at("F"), "F");
  if (j.contains("k")) {
    if (!j.at("k").is_number_integer()) throw InputError("instance: k must be an integer");
    doc.k = j.at("k").get<int>();
  }
  for (const VertexSet* part : {&doc.s, &doc.f})
    for (VertexId v : *part)
      if (!doc.graph.has_vertex(v)) throw InputError("instance: vertex " + std::to_string(v + 1) + " not in graph");
  return doc;
}

json instance_to_json(const MultiGraph& g, const VertexSet& s, const VertexSet& f, int k) {
  return {{"graph", graph_to_json(g)}, {"S", vertex_list(s)}, {"F", vertex_list(f)}, {"k", k}};
}

std::string file_digest(const std::filesystem::path& path) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : slurp(path)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream ss;
  ss << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return ss.str();
}

}  // namespace mmfvs::cli
