#include "catalog.hpp"

#include <algorithm>
#include <set>

namespace mmfvs::testing {

namespace {

using Partition = std::vector<std::vector<int>>;

int neighbours_in(const SmallGraph& g, int v, const std::vector<int>& cell) {
  int c = 0;
  for (int x : cell) c += g.adjacent(v, x) ? 1 : 0;
  return c;
}

// Equitable refinement. Cells split by neighbour count into each splitter,
// fragments ordered by that count, so the result is labelling-invariant.
void refine(const SmallGraph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < p.size() && !changed; ++s) {
      const std::vector<int> splitter = p[s];
      for (std::size_t c = 0; c < p.size(); ++c) {
        if (p[c].size() < 2) continue;
        std::vector<std::pair<int, int>> keyed;
        for (int v : p[c]) keyed.emplace_back(neighbours_in(g, v, splitter), v);
        std::sort(keyed.begin(), keyed.end());
        if (keyed.front().first == keyed.back().first) continue;
        Partition pieces;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
          pieces.back().push_back(keyed[i].second);
        }
        p.erase(p.begin() + static_cast<long>(c));
        p.insert(p.begin() + static_cast<long>(c), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

std::uint64_t code_of(const SmallGraph& g, const Partition& p) {
  std::uint64_t code = 0;
  int bit = 0;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j, ++bit)
      if (g.adjacent(p[i][0], p[j][0])) code |= std::uint64_t{1} << bit;
  return code;
}

void search(const SmallGraph& g, Partition p, std::uint64_t& best, bool& found) {
  refine(g, p);
  std::size_t target = p.size();
  for (std::size_t c = 0; c < p.size(); ++c)
    if (p[c].size() > 1 && (target == p.size() || p[c].size() < p[target].size())) target = c;
  if (target == p.size()) {
    const std::uint64_t code = code_of(g, p);
    if (!found || code > best) best = code;
    found = true;
    return;
  }
  for (int v : p[target]) {
    Partition q = p;
    std::vector<int> rest;
    for (int x : p[target])
      if (x != v) rest.push_back(x);
    q[target] = {v};
    q.insert(q.begin() + static_cast<long>(target) + 1, rest);
    search(g, q, best, found);
  }
}

}  // namespace

bool SmallGraph::connected() const {
  if (n == 0) return true;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v)
      if ((frontier >> v) & 1) next |= rows[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << n) - 1;
}

MultiGraph SmallGraph::to_multigraph() const {
  MultiGraph g(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adjacent(u, v)) g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  return g;
}

std::uint64_t canonical_code(const SmallGraph& g) {
  if (g.n <= 1) return 0;
  Partition p(1);
  for (int v = 0; v < g.n; ++v) p[0].push_back(v);
  std::uint64_t best = 0;
  bool found = false;
  search(g, p, best, found);
  return best;
}

SmallGraph decode(int n, std::uint64_t code) {
  SmallGraph g{n, std::vector<std::uint16_t>(static_cast<std::size_t>(n), 0)};
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((code >> bit) & 1) {
        g.rows[i] |= static_cast<std::uint16_t>(1u << j);
        g.rows[j] |= static_cast<std::uint16_t>(1u << i);
      }
  return g;
}

std::vector<std::vector<SmallGraph>> graph_catalog(int max_n) {
  std::vector<std::vector<SmallGraph>> out(static_cast<std::size_t>(max_n + 1));
  out[0].push_back(SmallGraph{});
  for (int n = 1; n <= max_n; ++n) {
    std::set<std::uint64_t> codes;
    for (const SmallGraph& h : out[static_cast<std::size_t>(n - 1)]) {
      for (std::uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
        SmallGraph g{n, h.rows};
        g.rows.push_back(static_cast<std::uint16_t>(nb));
        for (int v = 0; v < n - 1; ++v)
          if ((nb >> v) & 1) g.rows[v] |= static_cast<std::uint16_t>(1u << (n - 1));
        codes.insert(canonical_code(g));
      }
    }
    for (std::uint64_t c : codes) out[static_cast<std::size_t>(n)].push_back(decode(n, c));
  }
  return out;
}

}  // namespace mmfvs::testing
