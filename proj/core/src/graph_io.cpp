#include "mmfvs/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "mmfvs/errors.hpp"

namespace mmfvs {

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> split(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

long long number(const Token& t, int line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size())
    throw InputError("expected an integer, got '" + t.text + "'", line, t.column);
  return v;
}

}  // namespace

MultiGraph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool header = false;
  long long n = 0, m = 0, seen = 0;
  MultiGraph g;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tok = split(line);
    if (tok.empty() || tok[0].text == "c") continue;
    if (tok[0].text == "p") {
      if (header) throw InputError("duplicate header", lineno, tok[0].column);
      if (tok.size() != 4 || tok[1].text != "mmfvs")
        throw InputError("header must be 'p mmfvs <n> <m>'", lineno, tok[0].column);
      n = number(tok[2], lineno);
      m = number(tok[3], lineno);
      if (n < 0) throw InputError("negative vertex count", lineno, tok[2].column);
      if (m < 0) throw InputError("negative edge count", lineno, tok[3].column);
      g = MultiGraph(static_cast<std::size_t>(n));
      header = true;
      continue;
    }
    if (!header) throw InputError("edge before header", lineno, tok[0].column);
    if (tok.size() != 2) throw InputError("edge line must have two vertex ids", lineno, tok[0].column);
    long long u = number(tok[0], lineno), v = number(tok[1], lineno);
    if (u < 1 || u > n) throw InputError("vertex id out of range", lineno, tok[0].column);
    if (v < 1 || v > n) throw InputError("vertex id out of range", lineno, tok[1].column);
    if (++seen > m) throw InputError("more edges than declared", lineno, tok[0].column);
    g.add_edge(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
  }
  if (!header) throw InputError("missing 'p mmfvs' header", lineno > 0 ? lineno : 1);
  if (seen != m)
    throw InputError("declared " + std::to_string(m) + " edges, found " + std::to_string(seen), lineno);
  return g;
}

MultiGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return read_graph(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

MultiGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

std::vector<VertexId> compact_order(const MultiGraph& g) { return g.vertices(); }

void write_graph(std::ostream& out, const MultiGraph& g, const std::vector<std::string>& comments) {
  const auto order = compact_order(g);
  std::vector<VertexId> index(g.id_bound(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<VertexId>(i + 1);
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p mmfvs " << order.size() << ' ' << g.num_edges() << '\n';
  for (VertexId v : order) {
    for (int i = 0; i < g.self_loops(v); ++i) out << index[v] << ' ' << index[v] << '\n';
    for (auto [x, mult] : g.neighbors(v)) {
      if (x < v) continue;
      for (int i = 0; i < mult; ++i) out << index[v] << ' ' << index[x] << '\n';
    }
  }
}

std::string format_graph(const MultiGraph& g, const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_graph(out, g, comments);
  return out.str();
}

void write_graph_file(const std::string& path, const MultiGraph& g,
                      const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  write_graph(out, g, comments);
}

}  // namespace mmfvs
