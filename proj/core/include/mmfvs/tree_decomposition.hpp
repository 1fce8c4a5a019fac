#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mmfvs/graph.hpp"

namespace mmfvs {

struct TreeDecomposition {
  std::vector<std::vector<VertexId>> bags;  // each sorted ascending
  std::vector<std::pair<int, int>> edges;   // between bag indices

  int width() const;
};

enum class NiceKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
  NiceKind kind = NiceKind::Leaf;
  VertexId vertex = 0;          // Introduce / Forget
  std::vector<VertexId> bag;    // sorted ascending
  int left = -1;                // only child, or left child of a join
  int right = -1;
};

// Nodes are stored children first; the root is the last node and has an empty bag.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;

  int root() const { return static_cast<int>(nodes.size()) - 1; }
  int width() const;
};

// Throws InputError naming the first violated property: unknown vertex,
// vertex in no bag, edge not covered, disconnected vertex subtree, not a tree.
void validate(const TreeDecomposition& td, const MultiGraph& g);
// Also checks the per-kind bag rules of nice decompositions.
void validate(const NiceTreeDecomposition& ntd, const MultiGraph& g);

// Min-fill elimination, ties broken by smaller degree and then smaller id.
TreeDecomposition heuristic_decomposition(const MultiGraph& g);

// Rooted at bag 0. Introduces and forgets happen in ascending id order.
NiceTreeDecomposition make_nice(const TreeDecomposition& td, const MultiGraph& g);

// PACE format: "s td <bags> <max bag size> <n>", "b <id> <v...>", then tree
// edges "<a> <b>". Bag ids and vertices are 1-based on disk.
TreeDecomposition read_td(std::istream& in);
TreeDecomposition read_td_file(const std::string& path);
void write_td(std::ostream& out, const TreeDecomposition& td, std::size_t num_vertices);

}  // namespace mmfvs
