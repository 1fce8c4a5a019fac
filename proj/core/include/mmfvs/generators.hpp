#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mmfvs/annotated.hpp"
#include "mmfvs/cnf.hpp"
#include "mmfvs/graph.hpp"

namespace mmfvs {

// ---- force gadgets --------------------------------------------------------

struct ForceGadget {
  VertexId anchor = 0;
  VertexId twin = 0;
  std::vector<VertexId> leaves;
};

// Adds a twin and `a` leaves, each leaf adjacent to the anchor and the twin,
// plus the anchor-twin edge.
ForceGadget attach_force_gadget(MultiGraph& g, VertexId u, int a);

// ---- 3-SAT to 3-partitioned 3-SAT -----------------------------------------

// Variable x gets copies x, x+n, x+2n in parts 1..3. Clause literal i moves to
// part i, and each variable adds the three implications of a cycle.
PartitionedCnf sat_to_3p3sat(const CnfFormula& phi);

// ---- lower-bound construction over choice gadgets -------------------------

struct EthParams {
  int n = 0;        // variables per part after padding (a power of 4)
  int n_input = 0;  // variables per part before padding
  int m = 0;        // clauses
  int log_n = 0;
  int L = 0;
  int R = 0;
  long long A = 0;
  long long k = 0;
};

struct ChoiceGadget {
  int part = 0;   // 0..2
  int group = 0;  // 0..log_n-1
  std::vector<VertexId> ell, ellp, kappa, lambda, r;  // 2L, 2L, 2L, 2L, R
  std::vector<std::vector<VertexId>> mid;             // mid[i][j], 2L x R
  std::vector<std::vector<int>> blocks;               // blocks[i]: variables on ell[i]
  std::vector<ForceGadget> forces;                    // on every ell, ellp, r
};

struct EthConstruction {
  MultiGraph graph;
  EthParams params;
  PartitionedCnf formula;  // padded
  std::vector<ChoiceGadget> gadgets;
  std::vector<VertexId> clause_vertices;
  // variable -> (gadget, block, bit position inside the block)
  std::map<int, std::tuple<int, int, int>> placement;
};

// Requires a valid partition. Pads each part with clause-free variables up
// to the next power of 4 (at least 4).
EthConstruction gen_eth_instance(const PartitionedCnf& pc);

// Role name per vertex: ell, ellp, kappa, lambda, mid, r, clause, twin, leaf.
std::map<VertexId, std::string> eth_roles(const EthConstruction& ec);

struct EthReport {
  std::vector<std::string> violations;
  std::size_t vc_size = 0;
  long long vc_bound = 0;
  bool ok() const { return violations.empty(); }
};

// Structural check of every construction rule, the parameter formulas and
// the vertex-cover certificate.
EthReport verify_eth(const EthConstruction& ec);
// Properties every large minimal FVS must have: no anchors or twins, at most
// one middle vertex outside per choice set, and the per-gadget count.
std::vector<std::string> verify_eth_solution(const EthConstruction& ec, const VertexSet& s);

// Assignment over the unpadded variables (index 0 unused). Throws
// PreconditionError when it does not satisfy the formula.
Witness constructive_witness(const EthConstruction& ec, const std::vector<bool>& assignment);

// ---- 3-colouring to annotated instances -----------------------------------

struct ColoringInstance {
  AnnotatedInstance instance;
  VertexId w = 0;
  std::vector<std::vector<VertexId>> u;  // u[i][j], j = 0..2
  std::vector<std::vector<VertexId>> e;  // e[i][j]
  std::map<VertexId, std::string> roles;
};

// Throws PreconditionError on self-loops or parallel edges.
ColoringInstance coloring_to_annotated(const MultiGraph& g);

// ---- k-in-a-tree to extension ---------------------------------------------

struct ExtensionInstance {
  MultiGraph graph;
  VertexSet s;
};

// Adds s_i adjacent to terminals t_i and t_{i+1}.
ExtensionInstance k_in_tree_to_extension(const MultiGraph& g, const std::vector<VertexId>& terminals);

// ---- random instances -----------------------------------------------------

MultiGraph random_erdos_renyi(int n, double p, std::uint64_t seed);
// Random spanning tree plus `extra` distinct extra edges.
MultiGraph random_sparse(int n, int extra, std::uint64_t seed);

struct RandomAnnotatedProfile {
  int n = 8;
  int s_count = 2;
  int f_count = 2;
  double p = 0.4;
  double parallel = 0.0;  // chance of doubling an edge between two classes
  int k = -1;             // negative: drawn from 0..n
};
// Cycles inside G[F] and G[U] are broken, so S ∪ F is an FVS and F a forest.
AnnotatedInstance random_annotated(const RandomAnnotatedProfile& prof, std::uint64_t seed);

struct RandomPathProfile {
  int f_count = 3;
  int paths = 4;
  int max_path_len = 3;
  int s_count = 2;
  int k = -1;
};
AnnotatedInstance random_path_restricted(const RandomPathProfile& prof, std::uint64_t seed);

}  // namespace mmfvs
