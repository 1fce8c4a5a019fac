#include "mmfvs/twdp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "mmfvs/errors.hpp"
#include "mmfvs/union_find.hpp"

namespace mmfvs {

namespace {

constexpr int kFresh = 1 << 20;  // lone merge classes get kFresh + position

std::size_t position(const std::vector<VertexId>& bag, VertexId v) {
  return static_cast<std::size_t>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

template <class T>
void insert_at(std::vector<T>& v, std::size_t p, T x) {
  v.insert(v.begin() + static_cast<std::ptrdiff_t>(p), x);
}

template <class T>
void erase_at(std::vector<T>& v, std::size_t p) {
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(p));
}

void insert_position(DPTuple& t, std::size_t p, bool sol, int color, int merge, int count) {
  insert_at(t.in_solution, p, static_cast<char>(sol));
  insert_at(t.color, p, color);
  insert_at(t.merge, p, merge);
  insert_at(t.count, p, count);
}

void erase_position(DPTuple& t, std::size_t p) {
  erase_at(t.in_solution, p);
  erase_at(t.color, p);
  erase_at(t.merge, p);
  erase_at(t.count, p);
}

int fresh_merge(const DPTuple& t) {
  int m = kFresh;
  for (int x : t.merge) m = std::max(m, x + 1);
  return m;
}

}  // namespace

std::string DPTuple::key() const {
  std::string out;
  out.reserve(3 * bag_size());
  // Colours renamed in first-occurrence order.
  std::map<int, int> cmap, mcount, mmap;
  for (std::size_t i = 0; i < bag_size(); ++i)
    if (!in_solution[i]) {
      cmap.emplace(color[i], static_cast<int>(cmap.size()));
      ++mcount[merge[i]];
    }
  for (std::size_t i = 0; i < bag_size(); ++i)
    if (!in_solution[i] && mcount[merge[i]] >= 2) mmap.emplace(merge[i], static_cast<int>(mmap.size()) + 1);
  for (std::size_t i = 0; i < bag_size(); ++i) {
    if (in_solution[i]) {
      int code;
      if (color[i] == kPending)
        code = 0;
      else if (color[i] == kDone)
        code = 1;
      else {
        auto it = cmap.find(color[i]);
        if (it == cmap.end()) throw std::logic_error("tuple targets a colour with no forest vertex");
        code = 2 + it->second;
      }
      out.push_back(1);
      out.push_back(static_cast<char>(code));
      out.push_back(static_cast<char>(count[i]));
    } else {
      out.push_back(0);
      out.push_back(static_cast<char>(cmap.at(color[i])));
      auto it = mmap.find(merge[i]);
      out.push_back(static_cast<char>(it == mmap.end() ? 0 : it->second));
    }
  }
  return out;
}

DPTuple DPTuple::from_key(const std::string& key, int size) {
  DPTuple t;
  t.size = size;
  const std::size_t n = key.size() / 3;
  for (std::size_t i = 0; i < n; ++i) {
    const bool sol = key[3 * i] != 0;
    const int a = static_cast<unsigned char>(key[3 * i + 1]);
    const int b = static_cast<unsigned char>(key[3 * i + 2]);
    t.in_solution.push_back(sol);
    if (sol) {
      t.color.push_back(a == 0 ? kPending : a == 1 ? kDone : a - 2);
      t.merge.push_back(0);
      t.count.push_back(b);
    } else {
      t.color.push_back(a);
      t.merge.push_back(b == 0 ? kFresh + static_cast<int>(i) : b);
      t.count.push_back(0);
    }
  }
  return t;
}

void TupleTable::offer(const DPTuple& t, int child_a, int child_b, bool took) {
  std::string k = t.key();
  auto it = lookup_.find(k);
  if (it == lookup_.end()) {
    lookup_.emplace(k, static_cast<int>(entries.size()));
    entries.push_back({std::move(k), t.size, child_a, child_b, took});
  } else if (t.size > entries[it->second].size) {
    entries[it->second] = {std::move(k), t.size, child_a, child_b, took};
  }
}

TupleTable dp_leaf() {
  TupleTable t;
  t.offer(DPTuple{}, -1);
  return t;
}

TupleTable dp_introduce(const MultiGraph& g, const NiceNode& node, const NiceNode& child, const TupleTable& in) {
  const VertexId u = node.vertex;
  const std::size_t p = position(node.bag, u);
  const auto& cb = child.bag;
  const bool loop = g.self_loops(u) > 0;
  std::vector<int> mult(cb.size());
  for (std::size_t j = 0; j < cb.size(); ++j) mult[j] = g.multiplicity(u, cb[j]);

  TupleTable out;
  for (std::size_t ci = 0; ci < in.entries.size(); ++ci) {
    const DPTuple base = DPTuple::from_key(in.entries[ci].key, in.entries[ci].size);

    DPTuple s = base;
    insert_position(s, p, true, loop ? DPTuple::kDone : DPTuple::kPending, 0, 0);
    ++s.size;
    out.offer(s, static_cast<int>(ci), -1, true);

    if (loop) continue;
    // Components of the processed forest on the child bag, bag edges included.
    DisjointSets ds(cb.size());
    bool ok = true;
    for (std::size_t a = 0; a < cb.size(); ++a) {
      if (base.in_solution[a]) continue;
      for (std::size_t b = a + 1; b < cb.size(); ++b) {
        if (base.in_solution[b]) continue;
        if (base.merge[a] == base.merge[b] || g.multiplicity(cb[a], cb[b]) > 0) ds.unite(a, b);
      }
    }
    std::vector<std::size_t> roots;
    int color = -1;
    for (std::size_t j = 0; j < cb.size() && ok; ++j) {
      if (base.in_solution[j] || mult[j] == 0) continue;
      if (mult[j] >= 2) ok = false;
      if (color >= 0 && base.color[j] != color) ok = false;
      color = base.color[j];
      roots.push_back(ds.find(j));
    }
    if (!ok) continue;
    std::sort(roots.begin(), roots.end());
    if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) continue;

    std::vector<int> options;
    if (color >= 0) {
      options.push_back(color);
    } else {
      int next = 0;
      for (std::size_t j = 0; j < cb.size(); ++j)
        if (!base.in_solution[j]) {
          if (std::find(options.begin(), options.end(), base.color[j]) == options.end())
            options.push_back(base.color[j]);
          next = std::max(next, base.color[j] + 1);
        }
      options.push_back(next);
    }
    const int m = fresh_merge(base);
    for (int c : options) {
      DPTuple f = base;
      insert_position(f, p, false, c, m, 0);
      out.offer(f, static_cast<int>(ci));
    }
  }
  return out;
}

TupleTable dp_forget(const MultiGraph& g, const NiceNode& node, const NiceNode& child, const TupleTable& in) {
  const VertexId u = node.vertex;
  const auto& cb = child.bag;
  const std::size_t p = position(cb, u);
  std::vector<int> mult(cb.size());
  for (std::size_t j = 0; j < cb.size(); ++j) mult[j] = j == p ? 0 : g.multiplicity(u, cb[j]);

  TupleTable out;
  for (std::size_t ci = 0; ci < in.entries.size(); ++ci) {
    const DPTuple t = DPTuple::from_key(in.entries[ci].key, in.entries[ci].size);
    if (t.in_solution[p]) {
      bool ok = t.color[p] == DPTuple::kDone;
      if (!ok) {
        std::map<int, int> units;
        for (std::size_t j = 0; j < cb.size(); ++j)
          if (!t.in_solution[j] && mult[j] > 0) units[t.color[j]] += mult[j];
        if (t.color[p] == DPTuple::kPending) {
          for (auto [c, n] : units) ok = ok || n >= 2;
        } else {
          ok = t.count[p] + units[t.color[p]] >= 2;
        }
      }
      if (!ok) continue;
      DPTuple r = t;
      erase_position(r, p);
      out.offer(r, static_cast<int>(ci));
      continue;
    }

    const int cu = t.color[p];
    // Merge u's class with its forest neighbours' classes.
    DPTuple merged = t;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      if (t.in_solution[j] || mult[j] == 0) continue;
      const int old = merged.merge[j], now = merged.merge[p];
      if (old == now) continue;
      for (auto& x : merged.merge)
        if (x == old) x = now;
    }
    bool closed = true;
    for (std::size_t j = 0; j < cb.size(); ++j)
      if (j != p && !t.in_solution[j] && merged.merge[j] == merged.merge[p]) closed = false;
    if (closed) {
      bool shared = false;
      for (std::size_t j = 0; j < cb.size(); ++j)
        if (j != p && !t.in_solution[j] && t.color[j] == cu) shared = true;
      if (shared) continue;
    }

    // Credit u's edges to solution neighbours; a pending one may adopt u's colour.
    std::vector<DPTuple> variants{merged};
    for (std::size_t j = 0; j < cb.size(); ++j) {
      if (!t.in_solution[j] || mult[j] == 0) continue;
      const int target = t.color[j];
      if (target == DPTuple::kDone) continue;
      if (target == cu) {
        for (auto& v : variants) {
          v.count[j] += mult[j];
          if (v.count[j] >= 2) v.color[j] = DPTuple::kDone, v.count[j] = 0;
        }
      } else if (target == DPTuple::kPending) {
        std::vector<DPTuple> next;
        for (auto& v : variants) {
          next.push_back(v);
          DPTuple a = v;
          if (mult[j] >= 2) {
            a.color[j] = DPTuple::kDone;
            a.count[j] = 0;
          } else {
            a.color[j] = cu;
            a.count[j] = mult[j];
          }
          next.push_back(std::move(a));
        }
        variants = std::move(next);
      }
    }
    for (auto& v : variants) {
      if (closed) {
        bool waiting = false;
        for (std::size_t j = 0; j < cb.size(); ++j)
          if (v.in_solution[j] && v.color[j] == cu) waiting = true;
        if (waiting) continue;
      }
      erase_position(v, p);
      out.offer(v, static_cast<int>(ci));
    }
  }
  return out;
}

TupleTable dp_join(const MultiGraph& g, const NiceNode& node, const TupleTable& left, const TupleTable& right) {
  const auto& bag = node.bag;
  const std::size_t n = bag.size();
  // Tuples pair up only when solution positions and colours agree.
  auto signature = [n](const std::string& key) {
    std::string s;
    s.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      s.push_back(key[3 * i]);
      s.push_back(key[3 * i] ? 0 : key[3 * i + 1]);
    }
    return s;
  };
  std::unordered_map<std::string, std::vector<int>> by_sig;
  for (std::size_t r = 0; r < right.entries.size(); ++r)
    by_sig[signature(right.entries[r].key)].push_back(static_cast<int>(r));

  std::vector<std::pair<std::size_t, std::size_t>> bag_edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (g.multiplicity(bag[a], bag[b]) > 0) bag_edges.emplace_back(a, b);

  TupleTable out;
  for (std::size_t l = 0; l < left.entries.size(); ++l) {
    auto it = by_sig.find(signature(left.entries[l].key));
    if (it == by_sig.end()) continue;
    const DPTuple a = DPTuple::from_key(left.entries[l].key, left.entries[l].size);
    int xs = 0;
    for (std::size_t i = 0; i < n; ++i) xs += a.in_solution[i];
    for (int r : it->second) {
      const DPTuple b = DPTuple::from_key(right.entries[r].key, right.entries[r].size);
      DPTuple c = a;
      c.size = a.size + b.size - xs;
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        if (!a.in_solution[i]) continue;
        const int ta = a.color[i], tb = b.color[i];
        if (ta == DPTuple::kDone || tb == DPTuple::kDone) {
          c.color[i] = DPTuple::kDone, c.count[i] = 0;
        } else if (ta == DPTuple::kPending) {
          c.color[i] = tb, c.count[i] = b.count[i];
        } else if (tb == DPTuple::kPending) {
          c.color[i] = ta, c.count[i] = a.count[i];
        } else if (ta == tb) {
          const int sum = a.count[i] + b.count[i];
          if (sum >= 2)
            c.color[i] = DPTuple::kDone, c.count[i] = 0;
          else
            c.count[i] = sum;
        } else {
          ok = false;
        }
      }
      if (!ok) continue;
      DisjointSets joined(n), cycle(n);
      for (const DPTuple* side : {&a, &b})
        for (std::size_t i = 0; i < n && ok; ++i) {
          if (side->in_solution[i]) continue;
          for (std::size_t j = i + 1; j < n; ++j)
            if (!side->in_solution[j] && side->merge[j] == side->merge[i]) {
              if (!cycle.unite(i, j)) ok = false;
              joined.unite(i, j);
              break;  // chain each class through its next member only
            }
        }
      for (auto [x, y] : bag_edges)
        if (ok && !a.in_solution[x] && !a.in_solution[y] && !cycle.unite(x, y)) ok = false;
      if (!ok) continue;
      for (std::size_t i = 0; i < n; ++i)
        c.merge[i] = a.in_solution[i] ? 0 : static_cast<int>(joined.find(i)) + 1;
      out.offer(c, static_cast<int>(l), r);
    }
  }
  return out;
}

TwResult solve_tw(const MultiGraph& g, const NiceTreeDecomposition& ntd, int k) {
  validate(ntd, g);
  const auto& nodes = ntd.nodes;
  std::vector<TupleTable> tables(nodes.size());
  TwResult res;
  res.stats.width = ntd.width();
  res.stats.nodes = nodes.size();
  const double w1 = res.stats.width + 1;
  res.stats.tuple_bound = std::pow(4.0 * w1, 2.0 * w1);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const NiceNode& nd = nodes[i];
    switch (nd.kind) {
      case NiceKind::Leaf:
        tables[i] = dp_leaf();
        break;
      case NiceKind::Introduce:
        tables[i] = dp_introduce(g, nd, nodes[nd.left], tables[nd.left]);
        break;
      case NiceKind::Forget:
        tables[i] = dp_forget(g, nd, nodes[nd.left], tables[nd.left]);
        break;
      case NiceKind::Join:
        tables[i] = dp_join(g, nd, tables[nd.left], tables[nd.right]);
        break;
    }
    res.stats.max_tuples = std::max(res.stats.max_tuples, tables[i].size());
    res.stats.total_tuples += tables[i].size();
  }
  res.stats.within_bound = static_cast<double>(res.stats.max_tuples) <= res.stats.tuple_bound;

  const TupleTable& root = tables.back();
  if (root.entries.empty()) throw std::logic_error("treewidth DP produced no root tuple");
  const auto& best = root.entries.front();
  res.optimum = best.size;
  res.yes = res.optimum >= k;

  VertexSet sol;
  std::vector<std::pair<int, int>> stack{{ntd.root(), 0}};
  while (!stack.empty()) {
    auto [ni, ei] = stack.back();
    stack.pop_back();
    const NiceNode& nd = nodes[ni];
    const auto& e = tables[ni].entries[ei];
    if (nd.kind == NiceKind::Introduce && e.took) sol.insert(nd.vertex);
    if (nd.left >= 0) stack.emplace_back(nd.left, e.child_a);
    if (nd.right >= 0) stack.emplace_back(nd.right, e.child_b);
  }
  if (static_cast<int>(sol.size()) != res.optimum || !is_minimal_fvs(g, sol))
    throw std::logic_error("treewidth DP reconstruction produced an invalid solution");
  res.witness = make_witness(g, sol);
  return res;
}

TwResult solve_tw(const MultiGraph& g, int k) {
  return solve_tw(g, make_nice(heuristic_decomposition(g), g), k);
}

}  // namespace mmfvs
