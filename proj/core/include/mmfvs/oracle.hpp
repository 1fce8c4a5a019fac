#pragma once

#include <optional>
#include <vector>

#include "mmfvs/cnf.hpp"
#include "mmfvs/graph.hpp"

namespace mmfvs {

struct OracleConfig {
  // Largest number of free vertices an enumeration may range over.
  int max_free_vertices = 16;
};

struct OracleResult {
  // Maximum size, or -1 when no feasible set exists.
  int optimum = -1;
  std::optional<Witness> witness;

  bool decides(int k) const { return optimum >= 0 && optimum >= k; }
};

// Maximum minimal FVS by scanning subsets from the largest popcount down.
// Within a popcount the lexicographically smallest set wins.
OracleResult brute_mmfvs(const MultiGraph& g, const OracleConfig& cfg = {});

// Same optimum via depth-first search over induced forests, keeping the
// maximal ones. Used to cross-check brute_mmfvs.
OracleResult brute_mmfvs_forests(const MultiGraph& g, const OracleConfig& cfg = {});

// Maximum minimal FVS S' with s ⊆ S' and S' ∩ f = ∅. Enumerates subsets of the
// undecided vertices only, so the cap applies to |V ∖ (s ∪ f)|.
// Throws PreconditionError when s and f overlap or s ∪ f is not an FVS.
OracleResult brute_annotated(const MultiGraph& g, const VertexSet& s, const VertexSet& f,
                             const OracleConfig& cfg = {});

// Maximum minimal FVS containing s, or -1 when s does not extend.
OracleResult brute_extension(const MultiGraph& g, const VertexSet& s, const OracleConfig& cfg = {});

// Induced subtree of g containing every terminal, if any.
std::optional<VertexSet> brute_k_in_tree(const MultiGraph& g, const VertexSet& terminals,
                                         const OracleConfig& cfg = {});

// Proper 3-colouring (values 0..2 indexed by vertex id), if any.
std::optional<std::vector<int>> brute_three_coloring(const MultiGraph& g);

// Satisfying assignment (index 0 unused), if any. Caps at 24 variables.
std::optional<std::vector<bool>> brute_satisfiable(const CnfFormula& f);

}  // namespace mmfvs
