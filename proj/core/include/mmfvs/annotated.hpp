#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mmfvs/graph.hpp"

namespace mmfvs {

enum class Role : std::uint8_t { U, S, F };

struct UndoEvent {
  enum class Kind : std::uint8_t { ContractForestEdge, ContractIntoU, DeleteIsolatedU, DeleteForced };
  Kind kind;
  VertexId u = 0;
  VertexId v = 0;  // contractions only
  VertexId w = 0;  // contractions only: the fresh vertex
  bool v_in_forest = false;  // ContractIntoU: role of v before contraction
};

struct UndoLog {
  std::vector<UndoEvent> events;
  // Vertices deleted by DeleteForced; each rejoins the lifted solution.
  int forced = 0;
  // Forced deletions made while k was already 0.
  int overdraft = 0;
};

struct MeasureBreakdown {
  int k = 0;
  int cc_f = 0;
  int g = 0;
  int p = 0;
  int mu = 0;

  bool consistent() const { return mu == k + cc_f - g - p; }
};

// (G, S, F, k) with U = V ∖ (S ∪ F). k is kept non-negative; forced
// deletions that would push it below zero are still counted in the undo log.
class AnnotatedInstance {
 public:
  // Throws PreconditionError when S and F overlap, contain unknown vertices,
  // or S ∪ F is not a feedback vertex set.
  static AnnotatedInstance make(MultiGraph g, const VertexSet& s, const VertexSet& f, int k);

  const MultiGraph& graph() const { return graph_; }
  const MultiGraph& original() const { return *original_; }
  int k() const { return k_; }
  const UndoLog& undo() const { return undo_; }

  Role role(VertexId v) const { return role_[v]; }
  bool in(VertexId v, Role r) const { return graph_.has_vertex(v) && role_[v] == r; }
  VertexSet s() const { return members(Role::S); }
  VertexSet f() const { return members(Role::F); }
  VertexSet u() const { return members(Role::U); }
  VertexSet members(Role r) const;
  VertexMask mask(Role r) const;
  VertexMask mask(Role a, Role b) const;

  // Edge units from v into the given role class, self-loops excluded.
  int deg(VertexId v, Role r) const;
  int deg_fu(VertexId v) const { return deg(v, Role::F) + deg(v, Role::U); }

  // Role changes. Moving to F does not check acyclicity.
  void set_role(VertexId v, Role r);

  // Graph rewrites that are logged for lifting.
  VertexId contract(VertexId u, VertexId v, UndoEvent::Kind kind);
  void delete_isolated_u(VertexId u);
  void delete_forced(VertexId s);

 private:
  AnnotatedInstance() = default;

  MultiGraph graph_;
  std::shared_ptr<const MultiGraph> original_;
  std::vector<Role> role_;
  int k_ = 0;
  UndoLog undo_;
};

VertexSet good_vertices(const AnnotatedInstance& i);
std::vector<std::vector<VertexId>> interesting_paths(const AnnotatedInstance& i);
bool is_path_restricted(const AnnotatedInstance& i);
int forest_components(const AnnotatedInstance& i);
bool forest_is_acyclic(const AnnotatedInstance& i);
MeasureBreakdown measure(const AnnotatedInstance& i);

// Every S-vertex has a self-loop or two edge units into one component of
// G[F ∪ U]. Failing this, no solution exists.
bool feasible(const AnnotatedInstance& i);

// Rules 1-3. The *_applies predicates test the trigger; the rule functions
// throw PreconditionError when it does not hold.
bool rule1_applies(const AnnotatedInstance& i, VertexId u, VertexId v);
bool rule2_applies(const AnnotatedInstance& i, VertexId u);
bool rule3_applies(const AnnotatedInstance& i, VertexId u);
AnnotatedInstance rule1(const AnnotatedInstance& i, VertexId u, VertexId v);
AnnotatedInstance rule2(const AnnotatedInstance& i, VertexId u);
AnnotatedInstance rule3(const AnnotatedInstance& i, VertexId u);
void apply_rule1(AnnotatedInstance& i, VertexId u, VertexId v);
void apply_rule2(AnnotatedInstance& i, VertexId u);
void apply_rule3(AnnotatedInstance& i, VertexId u);

// Applies Rules 1-3 in ascending id order until none triggers, plus the
// removal of self-looped S-vertices. Stops early once G[F] has a cycle.
// Returns the number of applications.
int exhaust_rules(AnnotatedInstance& i);

// Path rules on path-restricted instances.
bool path_rule_i_applies(const AnnotatedInstance& i, VertexId u);
bool path_rule_ii_applies(const AnnotatedInstance& i, VertexId s);
AnnotatedInstance path_rule_i(const AnnotatedInstance& i, VertexId u);
AnnotatedInstance path_rule_ii(const AnnotatedInstance& i, VertexId s);

struct LiftResult {
  std::optional<Witness> witness;
  std::string failure;
};

// Replays the undo log backward on `solution`, a vertex set of the current
// graph, and verifies the result on the original graph.
LiftResult lift(const AnnotatedInstance& i, const VertexSet& solution);

// Greedy over interesting paths for path-restricted instances with S empty
// or k = 0. Returns a solution of the current graph, or nullopt when the
// greedy candidate is not a minimal FVS containing S.
std::optional<VertexSet> base_case_solve(const AnnotatedInstance& i);

struct PathSolveStats {
  long long nodes = 0;
  long long rules_applied = 0;
  long long lift_failures = 0;
  long long bound_violations = 0;
  int mu_initial = 0;
};

struct PathSolveConfig {
  // Total node cap; BudgetExceeded when reached. 0 means unlimited.
  long long node_budget = 0;
  // Nodes are expected to stay within bound_constant · 3^max(0,k-g) · (n+1).
  double bound_constant = 4.0;
  // Shared counter when several solvers draw from one budget.
  std::atomic<long long>* shared_nodes = nullptr;
  // Polled once per node; returning true abandons the search quietly.
  std::function<bool()> cancelled;
};

struct AnnotatedResult {
  std::optional<Witness> witness;  // on the original graph
  PathSolveStats stats;
  bool yes() const { return witness.has_value(); }
};

// Decides a path-restricted instance. The witness, if any, is a minimal FVS
// of the original graph of size at least the instance's k plus forced count.
// Throws PreconditionError when the instance is not path-restricted.
AnnotatedResult solve_path_restricted(const AnnotatedInstance& i, const PathSolveConfig& cfg = {});

// Witness from minimalize(S ∪ U) when the measure guarantees one. Throws
// PreconditionError when μ > 1, and when the extracted set is too small or
// does not lift.
Witness extract_when_mu_le_1(const AnnotatedInstance& i);
// Same extraction without the μ check; nullopt when it falls short of k.
std::optional<Witness> try_extract(const AnnotatedInstance& i);

}  // namespace mmfvs
