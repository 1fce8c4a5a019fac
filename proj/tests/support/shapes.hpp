#pragma once

#include <initializer_list>
#include <utility>

#include "mmfvs/graph.hpp"

namespace mmfvs::testing {

inline MultiGraph from_edges(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  MultiGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline MultiGraph complete(int n) {
  MultiGraph g(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  return g;
}

inline MultiGraph cycle(int n) {
  MultiGraph g(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) g.add_edge(static_cast<VertexId>(v), static_cast<VertexId>((v + 1) % n));
  return g;
}

inline MultiGraph path(int n) {
  MultiGraph g(static_cast<std::size_t>(n));
  for (int v = 0; v + 1 < n; ++v) g.add_edge(static_cast<VertexId>(v), static_cast<VertexId>(v + 1));
  return g;
}

// Vertices 0 and 1 on one side, 2..n+1 on the other.
inline MultiGraph k2n(int n) {
  MultiGraph g(static_cast<std::size_t>(n + 2));
  for (int v = 2; v < n + 2; ++v) {
    g.add_edge(0, static_cast<VertexId>(v));
    g.add_edge(1, static_cast<VertexId>(v));
  }
  return g;
}

}  // namespace mmfvs::testing
