#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "mmfvs/annotated.hpp"
#include "mmfvs/graph.hpp"

namespace mmfvs {

struct SolveConfig {
  int k = 0;
  // Visited-node cap over the whole run. 0 picks default_node_budget().
  long long node_budget = 0;
  // Worker threads for subset guesses.
  int parallel_width = 1;
  bool trace = false;
  std::function<void(const std::string&)> trace_sink;
  // Return a maximum witness: after each witness, decide again with k one
  // above its size until the answer is no.
  bool maximize = false;
  // Root G[U] trees at their largest id and break ties toward larger ids.
  bool reverse_roots = false;
  // Path-restricted calls are expected within this constant times 3^(k-g)·(n+1).
  double path_bound_constant = 4.0;
};

struct SolveStats {
  long long nodes = 0;            // top-level search nodes plus path-restricted nodes
  long long search_nodes = 0;
  long long path_nodes = 0;
  long long rules_applied = 0;
  long long subsets_explored = 0;
  long long path_calls = 0;
  long long extractions = 0;
  long long extraction_fallbacks = 0;  // measure said yes but the extracted set fell short
  long long lift_failures = 0;
  long long mu_violations = 0;    // branch child with μ > μ(parent) - 1
  long long good_violations = 0;  // branch child with fewer good vertices
  long long path_bound_violations = 0;
  int mu_initial = 0;             // largest μ over the guessed root instances
  int max_depth = 0;
  std::map<int, long long> mu_histogram;  // μ at branching nodes
};

struct SolveResult {
  std::optional<Witness> witness;
  SolveStats stats;
  bool yes() const { return witness.has_value(); }
};

// MMFVS_BUDGET when set to a positive integer, else a built-in default.
long long default_node_budget();

// minimalize(G, V(G)).
VertexSet initial_minimal_fvs(const MultiGraph& g);

// Decides whether g has a minimal FVS of size at least cfg.k. Throws
// BudgetExceeded when the node budget runs out and PreconditionError on k < 0.
SolveResult solve(const MultiGraph& g, const SolveConfig& cfg);

struct BranchChildren {
  VertexId v = 0;
  std::optional<AnnotatedInstance> into_s;       // v added to S
  std::optional<AnnotatedInstance> into_forest;  // v added to F, absent when F + v has a cycle
};

// Picks the interesting vertex deepest in its G[U] tree and returns both
// children with Rules 1-3 exhausted. Throws PreconditionError when the
// instance is path-restricted.
BranchChildren branch_step(const AnnotatedInstance& i, bool reverse_roots = false);

}  // namespace mmfvs
