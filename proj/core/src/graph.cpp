#include "mmfvs/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "mmfvs/errors.hpp"
#include "mmfvs/union_find.hpp"

namespace mmfvs {

namespace {

std::string vname(VertexId v) { return std::to_string(v); }

}  // namespace

MultiGraph::MultiGraph(std::size_t n) : slots_(n), alive_(n) {
  for (auto& s : slots_) s.alive = true;
}

VertexId MultiGraph::add_vertex() {
  slots_.emplace_back();
  slots_.back().alive = true;
  ++alive_;
  return static_cast<VertexId>(slots_.size() - 1);
}

void MultiGraph::check(VertexId v, const char* what) const {
  if (!has_vertex(v)) throw PreconditionError(std::string(what) + ": unknown vertex " + vname(v));
}

void MultiGraph::bump(std::vector<Neighbor>& adj, VertexId x, int delta) {
  auto it = std::lower_bound(adj.begin(), adj.end(), x,
                             [](const Neighbor& n, VertexId id) { return n.first < id; });
  if (it != adj.end() && it->first == x) {
    it->second += delta;
    if (it->second <= 0) adj.erase(it);
  } else if (delta > 0) {
    adj.insert(it, {x, delta});
  }
}

void MultiGraph::add_edge(VertexId u, VertexId v, int count) {
  check(u, "add_edge");
  check(v, "add_edge");
  if (count < 1) throw PreconditionError("add_edge: count must be positive");
  if (u == v) {
    slots_[u].loops += count;
  } else {
    bump(slots_[u].adj, v, count);
    bump(slots_[v].adj, u, count);
  }
  edges_ += static_cast<std::size_t>(count);
}

void MultiGraph::remove_edge(VertexId u, VertexId v, int count) {
  check(u, "remove_edge");
  check(v, "remove_edge");
  const int have = u == v ? slots_[u].loops : multiplicity(u, v);
  if (count < 1 || count > have) throw PreconditionError("remove_edge: not enough edge units");
  if (u == v) {
    slots_[u].loops -= count;
  } else {
    bump(slots_[u].adj, v, -count);
    bump(slots_[v].adj, u, -count);
  }
  edges_ -= static_cast<std::size_t>(count);
}

void MultiGraph::remove_vertex(VertexId v) {
  check(v, "remove_vertex");
  Slot& s = slots_[v];
  for (auto [x, m] : s.adj) {
    bump(slots_[x].adj, v, -m);
    edges_ -= static_cast<std::size_t>(m);
  }
  edges_ -= static_cast<std::size_t>(s.loops);
  s.adj.clear();
  s.adj.shrink_to_fit();
  s.loops = 0;
  s.alive = false;
  --alive_;
  labels_.erase(v);
}

VertexId MultiGraph::contract_edge(VertexId u, VertexId v) {
  check(u, "contract_edge");
  check(v, "contract_edge");
  if (u == v) throw PreconditionError("contract_edge: endpoints coincide");
  const int uv = multiplicity(u, v);
  if (uv < 1) throw PreconditionError("contract_edge: no edge " + vname(u) + "-" + vname(v));

  const int loops = slots_[u].loops + slots_[v].loops + uv - 1;
  std::vector<Neighbor> merged;
  for (VertexId side : {u, v}) {
    for (auto [x, m] : slots_[side].adj) {
      if (x == u || x == v) continue;
      merged.emplace_back(x, m);
    }
  }
  remove_vertex(u);
  remove_vertex(v);
  const VertexId w = add_vertex();
  if (loops > 0) add_edge(w, w, loops);
  for (auto [x, m] : merged) add_edge(w, x, m);
  return w;
}

std::vector<VertexId> MultiGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(alive_);
  for (VertexId v = 0; v < slots_.size(); ++v)
    if (slots_[v].alive) out.push_back(v);
  return out;
}

const std::vector<MultiGraph::Neighbor>& MultiGraph::neighbors(VertexId v) const {
  check(v, "neighbors");
  return slots_[v].adj;
}

int MultiGraph::multiplicity(VertexId u, VertexId v) const {
  check(u, "multiplicity");
  check(v, "multiplicity");
  if (u == v) return slots_[u].loops;
  const auto& adj = slots_[u].adj;
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Neighbor& n, VertexId id) { return n.first < id; });
  return (it != adj.end() && it->first == v) ? it->second : 0;
}

int MultiGraph::self_loops(VertexId v) const {
  check(v, "self_loops");
  return slots_[v].loops;
}

int MultiGraph::degree(VertexId v) const {
  check(v, "degree");
  int d = 2 * slots_[v].loops;
  for (auto [x, m] : slots_[v].adj) d += m;
  return d;
}

int MultiGraph::degree_into(VertexId v, const VertexMask& mask) const {
  check(v, "degree_into");
  int d = 0;
  for (auto [x, m] : slots_[v].adj)
    if (x < mask.size() && mask[x]) d += m;
  return d;
}

void MultiGraph::set_label(VertexId v, std::string label) {
  check(v, "set_label");
  labels_[v] = std::move(label);
}

const std::string* MultiGraph::label(VertexId v) const {
  auto it = labels_.find(v);
  return it == labels_.end() ? nullptr : &it->second;
}

VertexMask MultiGraph::mask_of(const VertexSet& s) const {
  VertexMask m(slots_.size(), 0);
  for (VertexId v : s) {
    check(v, "vertex set");
    m[v] = 1;
  }
  return m;
}

VertexMask MultiGraph::full_mask() const {
  VertexMask m(slots_.size(), 0);
  for (VertexId v = 0; v < slots_.size(); ++v) m[v] = slots_[v].alive ? 1 : 0;
  return m;
}

MultiGraph MultiGraph::induced(const VertexMask& keep) const {
  MultiGraph h = *this;
  for (VertexId v = 0; v < slots_.size(); ++v)
    if (slots_[v].alive && !(v < keep.size() && keep[v])) h.remove_vertex(v);
  return h;
}

bool operator==(const MultiGraph& a, const MultiGraph& b) {
  if (a.alive_ != b.alive_ || a.edges_ != b.edges_) return false;
  const std::size_t bound = std::max(a.slots_.size(), b.slots_.size());
  for (VertexId v = 0; v < bound; ++v) {
    const bool ia = a.has_vertex(v), ib = b.has_vertex(v);
    if (ia != ib) return false;
    if (!ia) continue;
    if (a.slots_[v].loops != b.slots_[v].loops || a.slots_[v].adj != b.slots_[v].adj) return false;
  }
  return true;
}

bool is_acyclic(const MultiGraph& g) { return is_acyclic(g, g.full_mask()); }

bool is_acyclic(const MultiGraph& g, const VertexMask& mask) {
  DisjointSets ds(g.id_bound());
  for (VertexId v = 0; v < g.id_bound(); ++v) {
    if (!g.has_vertex(v) || v >= mask.size() || !mask[v]) continue;
    if (g.self_loops(v) > 0) return false;
    for (auto [x, m] : g.neighbors(v)) {
      if (x < v || x >= mask.size() || !mask[x]) continue;
      if (m >= 2 || !ds.unite(v, x)) return false;
    }
  }
  return true;
}

namespace {

VertexMask complement(const MultiGraph& g, const VertexSet& s) {
  VertexMask m = g.full_mask();
  for (VertexId v : s) {
    if (!g.has_vertex(v)) throw PreconditionError("vertex " + vname(v) + " not in graph");
    m[v] = 0;
  }
  return m;
}

DisjointSets forest_components(const MultiGraph& g, const VertexMask& forest) {
  DisjointSets ds(g.id_bound());
  for (VertexId v = 0; v < g.id_bound(); ++v) {
    if (!g.has_vertex(v) || !forest[v]) continue;
    for (auto [x, m] : g.neighbors(v))
      if (x > v && forest[x]) ds.unite(v, x);
  }
  return ds;
}

// Whether v has a cycle inside forest ∪ {v}, given components of the forest.
bool closes_cycle(const MultiGraph& g, DisjointSets& ds, const VertexMask& forest, VertexId v) {
  if (g.self_loops(v) > 0) return true;
  std::vector<std::size_t> roots;
  for (auto [x, m] : g.neighbors(v)) {
    if (!forest[x]) continue;
    if (m >= 2) return true;
    roots.push_back(ds.find(x));
  }
  std::sort(roots.begin(), roots.end());
  return std::adjacent_find(roots.begin(), roots.end()) != roots.end();
}

}  // namespace

bool is_fvs(const MultiGraph& g, const VertexSet& s) { return is_acyclic(g, complement(g, s)); }

bool is_minimal_fvs(const MultiGraph& g, const VertexSet& s) {
  const VertexMask forest = complement(g, s);
  if (!is_acyclic(g, forest)) return false;
  DisjointSets ds = forest_components(g, forest);
  for (VertexId v : s)
    if (!closes_cycle(g, ds, forest, v)) return false;
  return true;
}

std::optional<Cycle> shortest_cycle_through(const MultiGraph& g, const VertexMask& forest,
                                            VertexId v) {
  if (g.self_loops(v) > 0) return Cycle{v};
  std::vector<VertexId> nbrs;
  for (auto [x, m] : g.neighbors(v)) {
    if (x >= forest.size() || !forest[x]) continue;
    if (m >= 2) return Cycle{v, x};
    nbrs.push_back(x);
  }
  std::optional<Cycle> best;
  constexpr VertexId kNone = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> parent(g.id_bound(), kNone);
  std::vector<int> dist(g.id_bound(), -1);
  std::vector<VertexId> touched;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    const VertexId a = nbrs[i];
    for (VertexId t : touched) dist[t] = -1, parent[t] = kNone;
    touched.clear();
    std::deque<VertexId> queue{a};
    dist[a] = 0;
    touched.push_back(a);
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (auto [y, m] : g.neighbors(x)) {
        if (y >= forest.size() || !forest[y] || dist[y] >= 0) continue;
        dist[y] = dist[x] + 1;
        parent[y] = x;
        touched.push_back(y);
        queue.push_back(y);
      }
    }
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      const VertexId b = nbrs[j];
      if (dist[b] < 0) continue;
      if (best && best->size() <= static_cast<std::size_t>(dist[b]) + 2) continue;
      Cycle c{v};
      std::vector<VertexId> path;
      for (VertexId y = b; y != kNone; y = parent[y]) path.push_back(y);
      c.insert(c.end(), path.rbegin(), path.rend());
      best = std::move(c);
    }
  }
  return best;
}

std::optional<std::map<VertexId, Cycle>> private_cycles(const MultiGraph& g, const VertexSet& s) {
  if (!is_minimal_fvs(g, s)) return std::nullopt;
  const VertexMask forest = complement(g, s);
  std::map<VertexId, Cycle> out;
  for (VertexId v : s) {
    auto c = shortest_cycle_through(g, forest, v);
    if (!c) return std::nullopt;
    out.emplace(v, std::move(*c));
  }
  return out;
}

VertexSet minimalize(const MultiGraph& g, const VertexSet& s) {
  VertexMask forest = complement(g, s);
  if (!is_acyclic(g, forest)) throw PreconditionError("minimalize: set is not a feedback vertex set");
  DisjointSets ds = forest_components(g, forest);
  VertexSet out;
  for (VertexId v : s) {
    if (closes_cycle(g, ds, forest, v)) {
      out.insert(v);
      continue;
    }
    forest[v] = 1;
    for (auto [x, m] : g.neighbors(v))
      if (forest[x]) ds.unite(v, x);
  }
  return out;
}

Witness make_witness(const MultiGraph& g, const VertexSet& s) {
  auto certs = private_cycles(g, s);
  if (!certs) throw PreconditionError("make_witness: set is not a minimal feedback vertex set");
  return Witness{s, std::move(*certs)};
}

bool is_cycle(const MultiGraph& g, const Cycle& c) {
  for (VertexId v : c)
    if (!g.has_vertex(v)) return false;
  if (c.empty()) return false;
  if (c.size() == 1) return g.self_loops(c[0]) > 0;
  if (c.size() == 2) return c[0] != c[1] && g.multiplicity(c[0], c[1]) >= 2;
  VertexSet seen(c.begin(), c.end());
  if (seen.size() != c.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (g.multiplicity(c[i], c[(i + 1) % c.size()]) < 1) return false;
  return true;
}

WitnessCheck check_witness(const MultiGraph& g, const Witness& w) {
  auto fail = [](std::string msg) { return WitnessCheck{false, std::move(msg)}; };
  for (VertexId v : w.solution)
    if (!g.has_vertex(v)) return fail("solution vertex " + vname(v) + " not in graph");
  if (!is_fvs(g, w.solution)) return fail("solution is not a feedback vertex set");
  for (const auto& [v, c] : w.certificates)
    if (!w.solution.count(v)) return fail("certificate for non-solution vertex " + vname(v));
  for (VertexId v : w.solution) {
    auto it = w.certificates.find(v);
    if (it == w.certificates.end()) return fail("missing certificate for vertex " + vname(v));
    const Cycle& c = it->second;
    if (!is_cycle(g, c)) return fail("certificate of vertex " + vname(v) + " is not a cycle");
    if (std::count(c.begin(), c.end(), v) != 1)
      return fail("certificate of vertex " + vname(v) + " does not pass through it");
    for (VertexId x : c)
      if (x != v && w.solution.count(x))
        return fail("certificate of vertex " + vname(v) + " meets solution vertex " + vname(x));
  }
  return {};
}

}  // namespace mmfvs
