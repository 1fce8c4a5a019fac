#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mmfvs/graph.hpp"

namespace mmfvs {

// Plain edge-list format:
//   c <comment>
//   p mmfvs <n> <m>
//   <u> <v>        one line per edge unit, 1-indexed; "u u" is a self-loop
//
// Reading yields vertices 0..n-1. Writing compacts live ids in ascending
// order, so read(write(g)) is g up to that renaming, and the writer output is
// a fixed point of read-then-write.
MultiGraph read_graph(std::istream& in);
MultiGraph read_graph_file(const std::string& path);
MultiGraph parse_graph(const std::string& text);

void write_graph(std::ostream& out, const MultiGraph& g, const std::vector<std::string>& comments = {});
std::string format_graph(const MultiGraph& g, const std::vector<std::string>& comments = {});
void write_graph_file(const std::string& path, const MultiGraph& g,
                      const std::vector<std::string>& comments = {});

// Ascending live ids; position i holds the id written as i+1.
std::vector<VertexId> compact_order(const MultiGraph& g);

}  // namespace mmfvs
