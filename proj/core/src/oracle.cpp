#include "mmfvs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "mmfvs/errors.hpp"
#include "mmfvs/union_find.hpp"

namespace mmfvs {

namespace {

using Mask = std::uint32_t;

// Index-compressed copy of a graph for fast subset tests.
struct Dense {
  std::vector<VertexId> ids;
  std::vector<int> loops;
  struct Edge {
    int a, b, mult;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<std::pair<int, int>>> adj;

  explicit Dense(const MultiGraph& g) : ids(g.vertices()) {
    std::vector<int> index(g.id_bound(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
    loops.resize(ids.size());
    adj.resize(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      loops[i] = g.self_loops(ids[i]);
      for (auto [x, m] : g.neighbors(ids[i])) {
        adj[i].push_back({index[x], m});
        if (index[x] > static_cast<int>(i)) edges.push_back({static_cast<int>(i), index[x], m});
      }
    }
  }

  int n() const { return static_cast<int>(ids.size()); }

  bool acyclic(Mask in) const {
    DisjointSets ds(ids.size());
    for (int i = 0; i < n(); ++i)
      if ((in >> i & 1) && loops[i]) return false;
    for (const auto& e : edges) {
      if (!(in >> e.a & 1) || !(in >> e.b & 1)) continue;
      if (e.mult >= 2 || !ds.unite(e.a, e.b)) return false;
    }
    return true;
  }

  // Solution `s` (as a mask) is a minimal FVS.
  bool minimal_fvs(Mask s) const {
    const Mask all = n() == 32 ? ~Mask{0} : ((Mask{1} << n()) - 1);
    const Mask forest = all & ~s;
    DisjointSets ds(ids.size());
    for (int i = 0; i < n(); ++i)
      if ((forest >> i & 1) && loops[i]) return false;
    for (const auto& e : edges) {
      if (!(forest >> e.a & 1) || !(forest >> e.b & 1)) continue;
      if (e.mult >= 2 || !ds.unite(e.a, e.b)) return false;
    }
    std::vector<std::size_t> roots;
    for (int v = 0; v < n(); ++v) {
      if (!(s >> v & 1) || loops[v]) continue;
      roots.clear();
      bool ok = false;
      for (auto [x, m] : adj[v]) {
        if (!(forest >> x & 1)) continue;
        if (m >= 2) {
          ok = true;
          break;
        }
        roots.push_back(ds.find(x));
      }
      if (!ok) {
        std::sort(roots.begin(), roots.end());
        ok = std::adjacent_find(roots.begin(), roots.end()) != roots.end();
      }
      if (!ok) return false;
    }
    return true;
  }

  VertexSet to_set(Mask m) const {
    VertexSet s;
    for (int i = 0; i < n(); ++i)
      if (m >> i & 1) s.insert(ids[i]);
    return s;
  }
};

void check_cap(int free, const OracleConfig& cfg, const char* who) {
  if (free > cfg.max_free_vertices || free > 30)
    throw BudgetExceeded(std::string(who) + ": " + std::to_string(free) +
                         " free vertices exceed the enumeration cap of " +
                         std::to_string(std::min(cfg.max_free_vertices, 30)));
}

// Visits every r-subset of positions 0..n-1 in lexicographic order as a mask
// over `slots`. Stops when visit returns true.
bool for_each_combination(const std::vector<int>& slots, int r,
                          const std::function<bool(Mask)>& visit) {
  const int n = static_cast<int>(slots.size());
  if (r > n) return false;
  std::vector<int> pick(r);
  for (int i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    Mask m = 0;
    for (int p : pick) m |= Mask{1} << slots[p];
    if (visit(m)) return true;
    int i = r - 1;
    while (i >= 0 && pick[i] == n - r + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// Largest minimal FVS of the form fixed ∪ T with T ⊆ free positions.
OracleResult best_over(const MultiGraph& g, const Dense& d, Mask fixed, const std::vector<int>& free) {
  for (int r = static_cast<int>(free.size()); r >= 0; --r) {
    Mask found = 0;
    bool hit = for_each_combination(free, r, [&](Mask t) {
      if (d.minimal_fvs(fixed | t)) {
        found = fixed | t;
        return true;
      }
      return false;
    });
    if (hit) {
      OracleResult res;
      res.optimum = std::popcount(found);
      res.witness = make_witness(g, d.to_set(found));
      return res;
    }
  }
  return {};
}

}  // namespace

OracleResult brute_mmfvs(const MultiGraph& g, const OracleConfig& cfg) {
  check_cap(static_cast<int>(g.num_vertices()), cfg, "brute_mmfvs");
  Dense d(g);
  std::vector<int> free(d.n());
  for (int i = 0; i < d.n(); ++i) free[i] = i;
  return best_over(g, d, 0, free);
}

OracleResult brute_mmfvs_forests(const MultiGraph& g, const OracleConfig& cfg) {
  check_cap(static_cast<int>(g.num_vertices()), cfg, "brute_mmfvs_forests");
  Dense d(g);
  const int n = d.n();
  const Mask all = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
  int best = -1;
  Mask best_sol = 0;
  // Decide vertices in order; `forest` stays acyclic along the way.
  std::function<void(int, Mask)> dfs = [&](int i, Mask forest) {
    if (i == n) {
      for (int v = 0; v < n; ++v)
        if (!(forest >> v & 1) && d.acyclic(forest | Mask{1} << v)) return;  // not maximal
      const Mask sol = all & ~forest;
      const int size = std::popcount(sol);
      if (size > best) best = size, best_sol = sol;
      return;
    }
    const Mask with = forest | Mask{1} << i;
    if (d.acyclic(with)) dfs(i + 1, with);
    dfs(i + 1, forest);
  };
  dfs(0, 0);
  OracleResult res;
  res.optimum = best;
  if (best >= 0) res.witness = make_witness(g, d.to_set(best_sol));
  return res;
}

OracleResult brute_annotated(const MultiGraph& g, const VertexSet& s, const VertexSet& f,
                             const OracleConfig& cfg) {
  for (VertexId v : s)
    if (f.count(v)) throw PreconditionError("S and F overlap at vertex " + std::to_string(v));
  VertexSet sf = s;
  sf.insert(f.begin(), f.end());
  if (!is_fvs(g, sf)) throw PreconditionError("S ∪ F is not a feedback vertex set");
  if (!is_acyclic(g, g.mask_of(f))) return {};
  Dense d(g);
  std::vector<int> free;
  Mask fixed = 0;
  for (int i = 0; i < d.n(); ++i) {
    if (s.count(d.ids[i]))
      fixed |= Mask{1} << i;
    else if (!f.count(d.ids[i]))
      free.push_back(i);
  }
  check_cap(static_cast<int>(free.size()), cfg, "brute_annotated");
  if (d.n() > 32) throw BudgetExceeded("brute_annotated: more than 32 vertices");
  return best_over(g, d, fixed, free);
}

OracleResult brute_extension(const MultiGraph& g, const VertexSet& s, const OracleConfig& cfg) {
  for (VertexId v : s)
    if (!g.has_vertex(v)) throw PreconditionError("vertex " + std::to_string(v) + " not in graph");
  Dense d(g);
  std::vector<int> free;
  Mask fixed = 0;
  for (int i = 0; i < d.n(); ++i) {
    if (s.count(d.ids[i]))
      fixed |= Mask{1} << i;
    else
      free.push_back(i);
  }
  check_cap(static_cast<int>(free.size()), cfg, "brute_extension");
  if (d.n() > 32) throw BudgetExceeded("brute_extension: more than 32 vertices");
  return best_over(g, d, fixed, free);
}

std::optional<VertexSet> brute_k_in_tree(const MultiGraph& g, const VertexSet& terminals,
                                         const OracleConfig& cfg) {
  check_cap(static_cast<int>(g.num_vertices()), cfg, "brute_k_in_tree");
  Dense d(g);
  Mask need = 0;
  for (int i = 0; i < d.n(); ++i)
    if (terminals.count(d.ids[i])) need |= Mask{1} << i;
  if (std::popcount(need) != static_cast<int>(terminals.size()))
    throw PreconditionError("terminal not in graph");
  const Mask limit = Mask{1} << d.n();
  for (Mask m = 0; m < limit; ++m) {
    if ((m & need) != need || !d.acyclic(m)) continue;
    // A forest is a tree iff it has |m| - 1 edges.
    int edges = 0;
    for (const auto& e : d.edges)
      if ((m >> e.a & 1) && (m >> e.b & 1)) edges += e.mult;
    if (m == 0 || edges == std::popcount(m) - 1) return d.to_set(m);
  }
  return std::nullopt;
}

std::optional<std::vector<int>> brute_three_coloring(const MultiGraph& g) {
  const auto vs = g.vertices();
  std::vector<int> color(g.id_bound(), -1);
  for (VertexId v : vs)
    if (g.self_loops(v) > 0) return std::nullopt;
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == vs.size()) return true;
    for (int c = 0; c < 3; ++c) {
      bool ok = true;
      for (auto [x, m] : g.neighbors(vs[i]))
        if (color[x] == c) ok = false;
      if (!ok) continue;
      color[vs[i]] = c;
      if (go(i + 1)) return true;
      color[vs[i]] = -1;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return color;
}

std::optional<std::vector<bool>> brute_satisfiable(const CnfFormula& f) {
  if (f.num_vars > 24) throw BudgetExceeded("brute_satisfiable: more than 24 variables");
  std::vector<bool> a(static_cast<std::size_t>(f.num_vars) + 1, false);
  const std::uint64_t limit = std::uint64_t{1} << f.num_vars;
  for (std::uint64_t m = 0; m < limit; ++m) {
    for (int v = 1; v <= f.num_vars; ++v) a[v] = (m >> (v - 1)) & 1;
    if (f.satisfied_by(a)) return a;
  }
  return std::nullopt;
}

}  // namespace mmfvs
