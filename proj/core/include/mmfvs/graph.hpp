#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mmfvs {

using VertexId = std::uint32_t;
using VertexSet = std::set<VertexId>;
// Cycle as an ordered vertex list. Length 1 is a self-loop, length 2 a
// doubled edge, otherwise a simple cycle closing back to the front.
using Cycle = std::vector<VertexId>;

// Membership mask indexed by vertex id, sized to MultiGraph::id_bound().
using VertexMask = std::vector<char>;

class MultiGraph {
 public:
  using Neighbor = std::pair<VertexId, int>;  // (id, multiplicity)

  MultiGraph() = default;
  // Vertices 0..n-1, no edges.
  explicit MultiGraph(std::size_t n);

  VertexId add_vertex();
  // Adds `count` units of the edge {u,v}. u == v adds self-loops.
  void add_edge(VertexId u, VertexId v, int count = 1);
  void remove_edge(VertexId u, VertexId v, int count = 1);
  void remove_vertex(VertexId v);
  // Contracts one unit of {u,v} into a fresh vertex and returns its id.
  // Remaining parallel u-v units become self-loops on the new vertex.
  VertexId contract_edge(VertexId u, VertexId v);

  bool has_vertex(VertexId v) const { return v < slots_.size() && slots_[v].alive; }
  std::size_t num_vertices() const { return alive_; }
  std::size_t num_edges() const { return edges_; }
  // One past the largest id ever allocated.
  VertexId id_bound() const { return static_cast<VertexId>(slots_.size()); }
  std::vector<VertexId> vertices() const;

  // Neighbors other than v itself, ascending by id.
  const std::vector<Neighbor>& neighbors(VertexId v) const;
  int multiplicity(VertexId u, VertexId v) const;
  int self_loops(VertexId v) const;
  // Edge units at v, a self-loop counting twice.
  int degree(VertexId v) const;
  // Edge units from v into the masked set, self-loops excluded.
  int degree_into(VertexId v, const VertexMask& mask) const;

  void set_label(VertexId v, std::string label);
  const std::string* label(VertexId v) const;
  const std::map<VertexId, std::string>& labels() const { return labels_; }

  VertexMask mask_of(const VertexSet& s) const;
  VertexMask full_mask() const;

  // Sub-multigraph induced by the masked vertices. Ids are preserved.
  MultiGraph induced(const VertexMask& keep) const;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b);

 private:
  struct Slot {
    bool alive = false;
    int loops = 0;
    std::vector<Neighbor> adj;
  };

  void check(VertexId v, const char* what) const;
  static void bump(std::vector<Neighbor>& adj, VertexId x, int delta);

  std::vector<Slot> slots_;
  std::size_t alive_ = 0;
  std::size_t edges_ = 0;
  std::map<VertexId, std::string> labels_;
};

struct Witness {
  VertexSet solution;
  std::map<VertexId, Cycle> certificates;
};

// Result of an independent witness check. `failure` names the first problem.
struct WitnessCheck {
  bool ok = true;
  std::string failure;
  explicit operator bool() const { return ok; }
};

bool is_acyclic(const MultiGraph& g);
// Acyclicity of the sub-multigraph induced by `mask`.
bool is_acyclic(const MultiGraph& g, const VertexMask& mask);
bool is_fvs(const MultiGraph& g, const VertexSet& s);
bool is_minimal_fvs(const MultiGraph& g, const VertexSet& s);

// Shortest cycle through v inside forest ∪ {v}, where `forest` is acyclic
// and excludes v.
std::optional<Cycle> shortest_cycle_through(const MultiGraph& g, const VertexMask& forest,
                                            VertexId v);
// One shortest private cycle per member, or nullopt when s is not a minimal FVS.
std::optional<std::map<VertexId, Cycle>> private_cycles(const MultiGraph& g, const VertexSet& s);

// Drops redundant members in ascending id order until s is minimal.
VertexSet minimalize(const MultiGraph& g, const VertexSet& s);

// Attaches certificates. Throws PreconditionError when s is not a minimal FVS.
Witness make_witness(const MultiGraph& g, const VertexSet& s);

// True when `cycle` is a cycle of g in the sense of the Cycle alias.
bool is_cycle(const MultiGraph& g, const Cycle& cycle);
// Re-checks the solution and every certificate against g.
WitnessCheck check_witness(const MultiGraph& g, const Witness& w);

}  // namespace mmfvs
