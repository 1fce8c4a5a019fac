#include "mmfvs/annotated.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mmfvs/errors.hpp"
#include "mmfvs/union_find.hpp"

namespace mmfvs {

namespace {

std::string vname(VertexId v) { return std::to_string(v); }

DisjointSets components(const MultiGraph& g, const VertexMask& mask) {
  DisjointSets ds(g.id_bound());
  for (VertexId v = 0; v < g.id_bound(); ++v) {
    if (!g.has_vertex(v) || !mask[v]) continue;
    for (auto [x, m] : g.neighbors(v))
      if (x > v && mask[x]) ds.unite(v, x);
  }
  return ds;
}

// Articulation points of the sub-multigraph induced by `mask`.
std::vector<char> articulation_points(const MultiGraph& g, const VertexMask& mask) {
  const VertexId n = g.id_bound();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> cut(n, 0);
  int timer = 0;
  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next;
    int children;
  };
  std::vector<Frame> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (!g.has_vertex(root) || !mask[root] || disc[root] >= 0) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, root, 0, 0});
    while (!stack.empty()) {
      Frame& fr = stack.back();
      const auto& adj = g.neighbors(fr.v);
      if (fr.next < adj.size()) {
        const VertexId x = adj[fr.next++].first;
        if (!mask[x]) continue;
        if (disc[x] < 0) {
          disc[x] = low[x] = timer++;
          ++fr.children;
          stack.push_back({x, fr.v, 0, 0});
        } else if (x != fr.parent) {
          low[fr.v] = std::min(low[fr.v], disc[x]);
        }
        continue;
      }
      const Frame done = fr;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children >= 2) cut[done.v] = 1;
        continue;
      }
      Frame& up = stack.back();
      low[up.v] = std::min(low[up.v], low[done.v]);
      if (up.v != root && low[done.v] >= disc[up.v]) cut[up.v] = 1;
    }
  }
  return cut;
}

// Vertices of the G[U] component containing u, in path order when the
// component is a path.
std::vector<VertexId> u_component(const AnnotatedInstance& i, VertexId u) {
  std::vector<VertexId> comp{u};
  std::vector<VertexId> stack{u};
  VertexSet seen{u};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (auto [y, m] : i.graph().neighbors(x))
      if (i.in(y, Role::U) && seen.insert(y).second) {
        comp.push_back(y);
        stack.push_back(y);
      }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

std::vector<VertexId> order_path(const AnnotatedInstance& i, const std::vector<VertexId>& comp) {
  if (comp.size() <= 1) return comp;
  auto u_deg = [&](VertexId x) { return i.deg(x, Role::U); };
  VertexId start = comp.front();
  bool found = false;
  for (VertexId x : comp)
    if (u_deg(x) <= 1) {
      start = x;
      found = true;
      break;
    }
  if (!found) return comp;
  std::vector<VertexId> out{start};
  VertexId prev = start, cur = start;
  while (out.size() < comp.size()) {
    VertexId next = cur;
    for (auto [y, m] : i.graph().neighbors(cur))
      if (i.in(y, Role::U) && y != prev) {
        next = y;
        break;
      }
    if (next == cur) break;
    prev = cur;
    cur = next;
    out.push_back(cur);
  }
  return out.size() == comp.size() ? out : comp;
}

}  // namespace

// ---------------------------------------------------------------------------
// Instance

AnnotatedInstance AnnotatedInstance::make(MultiGraph g, const VertexSet& s, const VertexSet& f, int k) {
  if (k < 0) throw PreconditionError("k must be non-negative");
  for (VertexId v : s)
    if (!g.has_vertex(v)) throw PreconditionError("S vertex " + vname(v) + " not in graph");
  for (VertexId v : f) {
    if (!g.has_vertex(v)) throw PreconditionError("F vertex " + vname(v) + " not in graph");
    if (s.count(v)) throw PreconditionError("S and F overlap at vertex " + vname(v));
  }
  VertexSet sf = s;
  sf.insert(f.begin(), f.end());
  if (!is_fvs(g, sf)) throw PreconditionError("S ∪ F is not a feedback vertex set");
  AnnotatedInstance i;
  i.original_ = std::make_shared<const MultiGraph>(g);
  i.graph_ = std::move(g);
  i.role_.assign(i.graph_.id_bound(), Role::U);
  for (VertexId v : s) i.role_[v] = Role::S;
  for (VertexId v : f) i.role_[v] = Role::F;
  i.k_ = k;
  return i;
}

VertexSet AnnotatedInstance::members(Role r) const {
  VertexSet out;
  for (VertexId v : graph_.vertices())
    if (role_[v] == r) out.insert(v);
  return out;
}

VertexMask AnnotatedInstance::mask(Role r) const { return mask(r, r); }

VertexMask AnnotatedInstance::mask(Role a, Role b) const {
  VertexMask m(graph_.id_bound(), 0);
  for (VertexId v = 0; v < graph_.id_bound(); ++v)
    if (graph_.has_vertex(v) && (role_[v] == a || role_[v] == b)) m[v] = 1;
  return m;
}

int AnnotatedInstance::deg(VertexId v, Role r) const {
  int d = 0;
  for (auto [x, m] : graph_.neighbors(v))
    if (role_[x] == r) d += m;
  return d;
}

void AnnotatedInstance::set_role(VertexId v, Role r) {
  if (!graph_.has_vertex(v)) throw PreconditionError("set_role: unknown vertex " + vname(v));
  role_[v] = r;
}

namespace {

// u never enters a solution, so a doubled edge s-u is a private cycle of s
// that survives every choice. It is kept as a self-loop on s.
void keep_doubled_edges(MultiGraph& g, VertexId u) {
  for (auto [x, m] : std::vector<MultiGraph::Neighbor>(g.neighbors(u)))
    if (m >= 2) g.add_edge(x, x);
}

}  // namespace

VertexId AnnotatedInstance::contract(VertexId u, VertexId v, UndoEvent::Kind kind) {
  const Role r = kind == UndoEvent::Kind::ContractForestEdge ? Role::F : role_[v];
  const bool v_forest = role_[v] == Role::F;
  if (kind == UndoEvent::Kind::ContractIntoU) keep_doubled_edges(graph_, u);
  const VertexId w = graph_.contract_edge(u, v);
  role_.resize(graph_.id_bound(), Role::U);
  role_[w] = r;
  undo_.events.push_back({kind, u, v, w, v_forest});
  return w;
}

void AnnotatedInstance::delete_isolated_u(VertexId u) {
  keep_doubled_edges(graph_, u);
  graph_.remove_vertex(u);
  undo_.events.push_back({UndoEvent::Kind::DeleteIsolatedU, u, 0, 0, false});
}

void AnnotatedInstance::delete_forced(VertexId s) {
  graph_.remove_vertex(s);
  undo_.events.push_back({UndoEvent::Kind::DeleteForced, s, 0, 0, false});
  ++undo_.forced;
  if (k_ > 0)
    --k_;
  else
    ++undo_.overdraft;
}

// ---------------------------------------------------------------------------
// Structure

VertexSet good_vertices(const AnnotatedInstance& i) {
  VertexSet out;
  for (VertexId v : i.graph().vertices())
    if (i.role(v) == Role::S && i.deg(v, Role::F) >= 2 && i.deg(v, Role::U) <= 1) out.insert(v);
  return out;
}

std::vector<std::vector<VertexId>> interesting_paths(const AnnotatedInstance& i) {
  const MultiGraph& g = i.graph();
  DisjointSets ds = components(g, i.mask(Role::U));
  std::map<std::size_t, std::vector<VertexId>> comps;
  for (VertexId v : g.vertices())
    if (i.role(v) == Role::U) comps[ds.find(v)].push_back(v);
  std::vector<std::vector<VertexId>> out;
  for (auto& [root, comp] : comps) {
    bool ok = true;
    for (VertexId v : comp)
      if (i.deg_fu(v) != 2) ok = false;
    if (ok) out.push_back(order_path(i, comp));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  return out;
}

bool is_path_restricted(const AnnotatedInstance& i) {
  for (VertexId v : i.graph().vertices())
    if (i.role(v) == Role::U && i.deg_fu(v) != 2) return false;
  return true;
}

int forest_components(const AnnotatedInstance& i) {
  const MultiGraph& g = i.graph();
  const VertexMask fm = i.mask(Role::F);
  DisjointSets ds = components(g, fm);
  int c = 0;
  for (VertexId v : g.vertices())
    if (fm[v] && ds.find(v) == v) ++c;
  return c;
}

bool forest_is_acyclic(const AnnotatedInstance& i) { return is_acyclic(i.graph(), i.mask(Role::F)); }

MeasureBreakdown measure(const AnnotatedInstance& i) {
  MeasureBreakdown m;
  m.k = i.k() - i.undo().overdraft;  // signed remainder, below 0 once forced vertices exceed k
  m.cc_f = forest_components(i);
  m.g = static_cast<int>(good_vertices(i).size());
  m.p = static_cast<int>(interesting_paths(i).size());
  m.mu = m.k + m.cc_f - m.g - m.p;
  return m;
}

namespace {

// Two edge units from s into one component, counting only `targets`.
bool doubly_attached(const AnnotatedInstance& i, DisjointSets& ds, VertexId s, const VertexMask& targets) {
  if (i.graph().self_loops(s) > 0) return true;
  std::map<std::size_t, int> units;
  for (auto [x, m] : i.graph().neighbors(s)) {
    if (!targets[x]) continue;
    if ((units[ds.find(x)] += m) >= 2) return true;
  }
  return false;
}

}  // namespace

bool feasible(const AnnotatedInstance& i) {
  const VertexMask fu = i.mask(Role::F, Role::U);
  DisjointSets ds = components(i.graph(), fu);
  for (VertexId v : i.graph().vertices())
    if (i.role(v) == Role::S && !doubly_attached(i, ds, v, fu)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Rules 1-3

bool rule1_applies(const AnnotatedInstance& i, VertexId u, VertexId v) {
  return u != v && i.in(u, Role::F) && i.in(v, Role::F) && i.graph().multiplicity(u, v) >= 1;
}

bool rule2_applies(const AnnotatedInstance& i, VertexId u) { return i.in(u, Role::U) && i.deg_fu(u) == 0; }

bool rule3_applies(const AnnotatedInstance& i, VertexId u) { return i.in(u, Role::U) && i.deg_fu(u) == 1; }

void apply_rule1(AnnotatedInstance& i, VertexId u, VertexId v) {
  if (!rule1_applies(i, u, v)) throw PreconditionError("rule 1 does not apply to " + vname(u) + "," + vname(v));
  i.contract(u, v, UndoEvent::Kind::ContractForestEdge);
}

void apply_rule2(AnnotatedInstance& i, VertexId u) {
  if (!rule2_applies(i, u)) throw PreconditionError("rule 2 does not apply to " + vname(u));
  i.delete_isolated_u(u);
}

void apply_rule3(AnnotatedInstance& i, VertexId u) {
  if (!rule3_applies(i, u)) throw PreconditionError("rule 3 does not apply to " + vname(u));
  for (auto [x, m] : i.graph().neighbors(u))
    if (i.role(x) != Role::S) {
      i.contract(u, x, UndoEvent::Kind::ContractIntoU);
      return;
    }
}

AnnotatedInstance rule1(const AnnotatedInstance& i, VertexId u, VertexId v) {
  AnnotatedInstance out = i;
  apply_rule1(out, u, v);
  return out;
}

AnnotatedInstance rule2(const AnnotatedInstance& i, VertexId u) {
  AnnotatedInstance out = i;
  apply_rule2(out, u);
  return out;
}

AnnotatedInstance rule3(const AnnotatedInstance& i, VertexId u) {
  AnnotatedInstance out = i;
  apply_rule3(out, u);
  return out;
}

int exhaust_rules(AnnotatedInstance& i) {
  int applied = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    if (!forest_is_acyclic(i)) return applied;
    for (VertexId v : i.graph().vertices()) {
      if (!i.graph().has_vertex(v)) continue;
      const Role r = i.role(v);
      if (r == Role::S && i.graph().self_loops(v) > 0) {
        i.delete_forced(v);
      } else if (r == Role::F) {
        VertexId other = v;
        for (auto [x, m] : i.graph().neighbors(v))
          if (i.role(x) == Role::F) {
            other = x;
            break;
          }
        if (other == v) continue;
        apply_rule1(i, v, other);
      } else if (r == Role::U) {
        const int d = i.deg_fu(v);
        if (d == 0)
          apply_rule2(i, v);
        else if (d == 1)
          apply_rule3(i, v);
        else
          continue;
      } else {
        continue;
      }
      ++applied;
      changed = true;
    }
  }
  return applied;
}

// ---------------------------------------------------------------------------
// Path rules

bool path_rule_i_applies(const AnnotatedInstance& i, VertexId u) {
  if (!is_path_restricted(i) || !i.in(u, Role::U)) return false;
  return articulation_points(i.graph(), i.mask(Role::F, Role::U))[u] != 0;
}

bool path_rule_ii_applies(const AnnotatedInstance& i, VertexId s) {
  if (!is_path_restricted(i) || !i.in(s, Role::S)) return false;
  DisjointSets ds = components(i.graph(), i.mask(Role::F, Role::U));
  return doubly_attached(i, ds, s, i.mask(Role::F));
}

AnnotatedInstance path_rule_i(const AnnotatedInstance& i, VertexId u) {
  if (!is_path_restricted(i)) throw PreconditionError("instance is not path-restricted");
  if (!path_rule_i_applies(i, u)) throw PreconditionError("rule (i) does not apply to " + vname(u));
  AnnotatedInstance out = i;
  out.set_role(u, Role::F);
  return out;
}

AnnotatedInstance path_rule_ii(const AnnotatedInstance& i, VertexId s) {
  if (!is_path_restricted(i)) throw PreconditionError("instance is not path-restricted");
  if (!path_rule_ii_applies(i, s)) throw PreconditionError("rule (ii) does not apply to " + vname(s));
  AnnotatedInstance out = i;
  out.delete_forced(s);
  return out;
}

// ---------------------------------------------------------------------------
// Lifting

LiftResult lift(const AnnotatedInstance& inst, const VertexSet& solution) {
  using Kind = UndoEvent::Kind;
  const auto& events = inst.undo().events;
  std::vector<MultiGraph> stages;
  stages.reserve(events.size() + 1);
  stages.push_back(inst.original());
  for (const auto& e : events) {
    MultiGraph g = stages.back();
    if (e.kind == Kind::ContractIntoU || e.kind == Kind::DeleteIsolatedU) keep_doubled_edges(g, e.u);
    if (e.kind == Kind::ContractForestEdge || e.kind == Kind::ContractIntoU) {
      const VertexId w = g.contract_edge(e.u, e.v);
      if (w != e.w) return {std::nullopt, "undo replay allocated a different vertex id"};
    } else {
      g.remove_vertex(e.u);
    }
    stages.push_back(std::move(g));
  }

  VertexSet w = solution;
  for (std::size_t idx = events.size(); idx-- > 0;) {
    const UndoEvent& e = events[idx];
    const MultiGraph& before = stages[idx];
    switch (e.kind) {
      case Kind::ContractForestEdge:
      case Kind::ContractIntoU: {
        if (!w.count(e.w)) break;
        VertexSet base = w;
        base.erase(e.w);
        const VertexSet options[3] = {[&] { auto s = base; s.insert(e.v); return s; }(),
                                      [&] { auto s = base; s.insert(e.u); return s; }(),
                                      [&] { auto s = base; s.insert(e.u); s.insert(e.v); return s; }()};
        bool done = false;
        for (const auto& cand : options)
          if (is_minimal_fvs(before, cand)) {
            w = cand;
            done = true;
            break;
          }
        if (!done) return {std::nullopt, "no lifting of contracted vertex " + vname(e.w)};
        break;
      }
      case Kind::DeleteIsolatedU: {
        VertexMask forest = before.full_mask();
        for (VertexId x : w) forest[x] = 0;
        forest[e.u] = 0;
        if (shortest_cycle_through(before, forest, e.u)) w.insert(e.u);
        break;
      }
      case Kind::DeleteForced:
        w.insert(e.u);
        break;
    }
  }
  if (!is_minimal_fvs(inst.original(), w))
    return {std::nullopt, "lifted set is not a minimal feedback vertex set"};
  return {make_witness(inst.original(), w), {}};
}

// ---------------------------------------------------------------------------
// Base case and path-restricted solver

std::optional<VertexSet> base_case_solve(const AnnotatedInstance& i) {
  const MultiGraph& g = i.graph();
  DisjointSets ds = components(g, i.mask(Role::F));
  VertexSet out = i.s();
  for (const auto& path : interesting_paths(i)) {
    std::vector<VertexId> ends;
    for (VertexId x : path)
      for (auto [y, m] : g.neighbors(x))
        if (i.role(y) == Role::F)
          for (int t = 0; t < m; ++t) ends.push_back(y);
    if (ends.size() != 2) return std::nullopt;
    if (ds.same(ends[0], ends[1]))
      out.insert(*std::min_element(path.begin(), path.end()));
    else
      ds.unite(ends[0], ends[1]);
  }
  if (!is_minimal_fvs(g, out)) return std::nullopt;
  return out;
}

namespace {

class PathSolver {
 public:
  explicit PathSolver(const PathSolveConfig& cfg) : cfg_(cfg) {}

  PathSolveStats stats;
  std::optional<Witness> result;

  bool solve(AnnotatedInstance inst) {
    tick();
    if (!reduce(inst)) return false;
    const bool s_empty = inst.s().empty();
    if (s_empty || inst.k() == 0) {
      if (auto w = base_case_solve(inst)) {
        if (static_cast<int>(w->size()) >= inst.k()) {
          LiftResult lr = lift(inst, *w);
          if (lr.witness) {
            result = std::move(lr.witness);
            return true;
          }
          ++stats.lift_failures;
        }
      }
      if (s_empty) return false;
    }
    return branch(inst);
  }

 private:
  void tick() {
    ++stats.nodes;
    long long total = stats.nodes;
    if (cfg_.shared_nodes) total = ++*cfg_.shared_nodes;
    if (cfg_.node_budget > 0 && total > cfg_.node_budget)
      throw BudgetExceeded("node budget of " + std::to_string(cfg_.node_budget) + " exhausted");
    if (cfg_.cancelled && cfg_.cancelled()) throw Cancelled{};
  }

  // Feasibility discard, rules (i)/(ii) and good-vertex preprocessing to a
  // fixpoint. False when the instance is discarded.
  bool reduce(AnnotatedInstance& inst) {
    while (true) {
      if (!forest_is_acyclic(inst) || !feasible(inst)) return false;
      const MultiGraph& g = inst.graph();
      const VertexMask fu = inst.mask(Role::F, Role::U);
      const auto cut = articulation_points(g, fu);
      bool changed = false;
      for (VertexId v : g.vertices())
        if (inst.role(v) == Role::U && cut[v]) {
          inst.set_role(v, Role::F);
          ++stats.rules_applied;
          changed = true;
        }
      if (changed) continue;
      DisjointSets ds = components(g, fu);
      const VertexMask fm = inst.mask(Role::F);
      for (VertexId v : g.vertices())
        if (inst.role(v) == Role::S && doubly_attached(inst, ds, v, fm)) {
          inst.delete_forced(v);
          ++stats.rules_applied;
          changed = true;
        }
      if (changed) continue;
      for (VertexId h : good_vertices(inst)) {
        if (inst.deg(h, Role::U) != 1) continue;
        for (auto [y, m] : inst.graph().neighbors(h))
          if (inst.role(y) == Role::U) {
            inst.set_role(y, Role::F);
            ++stats.rules_applied;
            changed = true;
            break;
          }
      }
      if (!changed) return true;
    }
  }

  static void into_s(AnnotatedInstance& inst, VertexId u) {
    const auto path = u_component(inst, u);
    for (VertexId t : path) inst.set_role(t, t == u ? Role::S : Role::F);
  }

  bool branch(const AnnotatedInstance& inst) {
    const MultiGraph& g = inst.graph();
    const VertexId s = *inst.s().begin();
    DisjointSets ds = components(g, inst.mask(Role::F, Role::U));
    std::vector<std::pair<VertexId, int>> un;
    std::vector<std::size_t> f_roots;
    for (auto [x, m] : g.neighbors(s)) {
      if (inst.role(x) == Role::U) un.emplace_back(x, m);
      if (inst.role(x) == Role::F) f_roots.push_back(ds.find(x));
    }
    for (auto [u, m] : un) {
      if (std::find(f_roots.begin(), f_roots.end(), ds.find(u)) == f_roots.end()) continue;
      AnnotatedInstance into_f = inst;
      into_f.set_role(u, Role::F);
      if (solve(std::move(into_f))) return true;
      AnnotatedInstance in_s = inst;
      into_s(in_s, u);
      return solve(std::move(in_s));
    }
    for (std::size_t x = 0; x < un.size(); ++x)
      for (std::size_t y = x; y < un.size(); ++y) {
        const VertexId a = un[x].first, b = un[y].first;
        if (x == y ? un[x].second < 2 : !ds.same(a, b)) continue;
        AnnotatedInstance both = inst;
        both.set_role(a, Role::F);
        both.set_role(b, Role::F);
        if (solve(std::move(both))) return true;
        AnnotatedInstance take_a = inst;
        into_s(take_a, a);
        if (solve(std::move(take_a))) return true;
        if (a == b) return false;
        AnnotatedInstance take_b = inst;
        into_s(take_b, b);
        return solve(std::move(take_b));
      }
    return false;
  }

 public:
  struct Cancelled {};

 private:
  const PathSolveConfig& cfg_;
};

}  // namespace

AnnotatedResult solve_path_restricted(const AnnotatedInstance& i, const PathSolveConfig& cfg) {
  if (!is_path_restricted(i)) throw PreconditionError("instance is not path-restricted");
  const MeasureBreakdown mb = measure(i);
  PathSolver solver(cfg);
  solver.stats.mu_initial = mb.mu;
  AnnotatedResult res;
  try {
    solver.solve(i);
  } catch (const PathSolver::Cancelled&) {
  }
  res.witness = std::move(solver.result);
  res.stats = solver.stats;
  const double bound = cfg.bound_constant * std::pow(3.0, std::max(0, mb.k - mb.g)) *
                       static_cast<double>(i.graph().num_vertices() + 1);
  if (static_cast<double>(res.stats.nodes) > bound) ++res.stats.bound_violations;
  return res;
}

// ---------------------------------------------------------------------------
// Extraction

std::optional<Witness> try_extract(const AnnotatedInstance& i) {
  const MultiGraph& g = i.graph();
  VertexMask forest = i.mask(Role::F);
  if (!is_acyclic(g, forest)) return std::nullopt;
  DisjointSets ds = components(g, forest);
  VertexSet kept;
  // Undecided vertices are dropped first so S survives whenever possible.
  for (Role r : {Role::U, Role::S})
    for (VertexId v : g.vertices()) {
      if (i.role(v) != r) continue;
      bool cycle = g.self_loops(v) > 0;
      std::vector<std::size_t> roots;
      for (auto [x, m] : g.neighbors(v)) {
        if (!forest[x]) continue;
        if (m >= 2) cycle = true;
        roots.push_back(ds.find(x));
      }
      std::sort(roots.begin(), roots.end());
      if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) cycle = true;
      if (cycle) {
        kept.insert(v);
      } else {
        forest[v] = 1;
        for (auto [x, m] : g.neighbors(v))
          if (forest[x]) ds.unite(v, x);
      }
    }
  if (static_cast<int>(kept.size()) < i.k()) return std::nullopt;
  LiftResult lr = lift(i, kept);
  return std::move(lr.witness);
}

Witness extract_when_mu_le_1(const AnnotatedInstance& i) {
  const MeasureBreakdown mb = measure(i);
  if (mb.mu > 1) throw PreconditionError("measure is " + std::to_string(mb.mu) + ", above 1");
  auto w = try_extract(i);
  if (!w)
    throw PreconditionError("extraction fell short of k=" + std::to_string(i.k()) +
                            " (cc(F)=" + std::to_string(mb.cc_f) + ")");
  return std::move(*w);
}

}  // namespace mmfvs
