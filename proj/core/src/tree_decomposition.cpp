#include "mmfvs/tree_decomposition.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "mmfvs/errors.hpp"
#include "mmfvs/union_find.hpp"

namespace mmfvs {

int TreeDecomposition::width() const {
  int w = 0;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()));
  return w - 1;
}

int NiceTreeDecomposition::width() const {
  int w = 0;
  for (const auto& n : nodes) w = std::max(w, static_cast<int>(n.bag.size()));
  return w - 1;
}

namespace {

std::string vname(VertexId v) { return std::to_string(v + 1); }

// Shared checks once a bag list and an adjacency between bags are known.
void validate_bags(const std::vector<std::vector<VertexId>>& bags,
                   const std::vector<std::vector<int>>& tree_adj, const MultiGraph& g) {
  std::vector<std::vector<int>> holders(g.id_bound());
  for (std::size_t b = 0; b < bags.size(); ++b) {
    for (std::size_t i = 0; i < bags[b].size(); ++i) {
      const VertexId v = bags[b][i];
      if (!g.has_vertex(v)) throw InputError("bag " + std::to_string(b + 1) + " lists unknown vertex " + vname(v));
      if (i > 0 && bags[b][i - 1] >= v)
        throw InputError("bag " + std::to_string(b + 1) + " is not sorted or repeats a vertex");
      holders[v].push_back(static_cast<int>(b));
    }
  }
  for (VertexId v : g.vertices())
    if (holders[v].empty()) throw InputError("vertex " + vname(v) + " is in no bag");
  for (VertexId v : g.vertices())
    for (auto [x, m] : g.neighbors(v)) {
      if (x < v) continue;
      bool covered = false;
      for (int b : holders[v])
        if (std::binary_search(bags[b].begin(), bags[b].end(), x)) covered = true;
      if (!covered) throw InputError("edge not covered: " + vname(v) + "-" + vname(x));
    }
  for (VertexId v : g.vertices()) {
    const auto& hs = holders[v];
    std::set<int> in(hs.begin(), hs.end()), seen{hs.front()};
    std::vector<int> stack{hs.front()};
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      for (int c : tree_adj[b])
        if (in.count(c) && seen.insert(c).second) stack.push_back(c);
    }
    if (seen.size() != in.size()) throw InputError("disconnected vertex subtree for vertex " + vname(v));
  }
}

}  // namespace

void validate(const TreeDecomposition& td, const MultiGraph& g) {
  const int nb = static_cast<int>(td.bags.size());
  if (nb == 0) {
    if (g.num_vertices() > 0) throw InputError("vertex " + vname(g.vertices().front()) + " is in no bag");
    return;
  }
  if (static_cast<int>(td.edges.size()) != nb - 1) throw InputError("not a tree: wrong number of edges");
  DisjointSets ds(nb);
  std::vector<std::vector<int>> adj(nb);
  for (auto [a, b] : td.edges) {
    if (a < 0 || b < 0 || a >= nb || b >= nb) throw InputError("not a tree: edge to unknown bag");
    if (!ds.unite(a, b)) throw InputError("not a tree: cycle among bags");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  validate_bags(td.bags, adj, g);
}

void validate(const NiceTreeDecomposition& ntd, const MultiGraph& g) {
  const int n = static_cast<int>(ntd.nodes.size());
  if (n == 0) throw InputError("not a tree: no nodes");
  std::vector<std::vector<int>> adj(n);
  std::vector<int> parents(n, 0);
  std::vector<std::vector<VertexId>> bags;
  for (int i = 0; i < n; ++i) {
    const NiceNode& nd = ntd.nodes[i];
    bags.push_back(nd.bag);
    auto child_bag = [&](int c) -> const std::vector<VertexId>& {
      if (c < 0 || c >= i) throw InputError("not a tree: child index out of order at node " + std::to_string(i));
      ++parents[c];
      adj[i].push_back(c);
      adj[c].push_back(i);
      return ntd.nodes[c].bag;
    };
    switch (nd.kind) {
      case NiceKind::Leaf:
        if (!nd.bag.empty()) throw InputError("leaf node " + std::to_string(i) + " has a non-empty bag");
        break;
      case NiceKind::Introduce: {
        auto b = child_bag(nd.left);
        auto pos = std::lower_bound(b.begin(), b.end(), nd.vertex);
        if (pos != b.end() && *pos == nd.vertex) throw InputError("introduce of a vertex already in the bag");
        b.insert(pos, nd.vertex);
        if (b != nd.bag) throw InputError("introduce node " + std::to_string(i) + " changes more than one vertex");
        break;
      }
      case NiceKind::Forget: {
        auto b = child_bag(nd.left);
        auto pos = std::lower_bound(b.begin(), b.end(), nd.vertex);
        if (pos == b.end() || *pos != nd.vertex) throw InputError("forget of a vertex not in the bag");
        b.erase(pos);
        if (b != nd.bag) throw InputError("forget node " + std::to_string(i) + " changes more than one vertex");
        break;
      }
      case NiceKind::Join:
        if (child_bag(nd.left) != nd.bag || child_bag(nd.right) != nd.bag)
          throw InputError("join node " + std::to_string(i) + " has children with different bags");
        break;
    }
  }
  for (int i = 0; i + 1 < n; ++i)
    if (parents[i] != 1) throw InputError("not a tree: node " + std::to_string(i) + " has " +
                                          std::to_string(parents[i]) + " parents");
  if (!ntd.nodes.back().bag.empty()) throw InputError("root bag is not empty");
  validate_bags(bags, adj, g);
}

TreeDecomposition heuristic_decomposition(const MultiGraph& g) {
  const auto vs = g.vertices();
  std::vector<std::set<VertexId>> adj(g.id_bound());
  for (VertexId v : vs)
    for (auto [x, m] : g.neighbors(v)) adj[v].insert(x);
  std::vector<char> gone(g.id_bound(), 0);
  std::vector<VertexId> order;
  std::vector<std::vector<VertexId>> bag_of(g.id_bound());
  for (std::size_t step = 0; step < vs.size(); ++step) {
    VertexId best = 0;
    long best_fill = -1;
    std::size_t best_deg = 0;
    for (VertexId v : vs) {
      if (gone[v]) continue;
      long fill = 0;
      for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
        for (auto b = std::next(a); b != adj[v].end(); ++b)
          if (!adj[*a].count(*b)) ++fill;
      if (best_fill < 0 || fill < best_fill || (fill == best_fill && adj[v].size() < best_deg)) {
        best = v;
        best_fill = fill;
        best_deg = adj[v].size();
      }
    }
    std::vector<VertexId> bag(adj[best].begin(), adj[best].end());
    bag.push_back(best);
    std::sort(bag.begin(), bag.end());
    bag_of[best] = bag;
    for (VertexId a : adj[best])
      for (VertexId b : adj[best])
        if (a != b) adj[a].insert(b);
    for (VertexId a : adj[best]) adj[a].erase(best);
    adj[best].clear();
    gone[best] = 1;
    order.push_back(best);
  }
  TreeDecomposition td;
  std::vector<int> index(g.id_bound(), -1), pos(g.id_bound(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < order.size(); ++i) {
    index[order[i]] = static_cast<int>(i);
    td.bags.push_back(bag_of[order[i]]);
  }
  int prev_root = -1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const VertexId v = order[i];
    int parent = -1;
    for (VertexId x : bag_of[v])
      if (x != v && (parent < 0 || pos[x] < parent)) parent = pos[x];
    if (parent >= 0) {
      td.edges.emplace_back(static_cast<int>(i), parent);
    } else {
      if (prev_root >= 0) td.edges.emplace_back(prev_root, static_cast<int>(i));
      prev_root = static_cast<int>(i);
    }
  }
  // Root the result at the last eliminated bag so make_nice walks downward.
  if (!td.bags.empty()) {
    const int last = static_cast<int>(td.bags.size()) - 1;
    std::swap(td.bags[0], td.bags[last]);
    for (auto& [a, b] : td.edges) {
      if (a == 0) a = last; else if (a == last) a = 0;
      if (b == 0) b = last; else if (b == last) b = 0;
    }
  }
  return td;
}

NiceTreeDecomposition make_nice(const TreeDecomposition& td, const MultiGraph& g) {
  validate(td, g);
  NiceTreeDecomposition ntd;
  auto push = [&](NiceNode n) {
    ntd.nodes.push_back(std::move(n));
    return static_cast<int>(ntd.nodes.size()) - 1;
  };
  auto introduce = [&](int child, VertexId v) {
    NiceNode n{NiceKind::Introduce, v, ntd.nodes[child].bag, child, -1};
    n.bag.insert(std::lower_bound(n.bag.begin(), n.bag.end(), v), v);
    return push(std::move(n));
  };
  auto forget = [&](int child, VertexId v) {
    NiceNode n{NiceKind::Forget, v, ntd.nodes[child].bag, child, -1};
    n.bag.erase(std::lower_bound(n.bag.begin(), n.bag.end(), v));
    return push(std::move(n));
  };
  // Rewrites node `at` (bag `from`) into bag `to`: forgets first, then introduces.
  auto morph = [&](int at, const std::vector<VertexId>& to) {
    const std::vector<VertexId> from = ntd.nodes[at].bag;
    for (VertexId v : from)
      if (!std::binary_search(to.begin(), to.end(), v)) at = forget(at, v);
    for (VertexId v : to)
      if (!std::binary_search(from.begin(), from.end(), v)) at = introduce(at, v);
    return at;
  };

  if (td.bags.empty()) {
    push(NiceNode{});
    return ntd;
  }
  const int nb = static_cast<int>(td.bags.size());
  std::vector<std::vector<int>> adj(nb);
  for (auto [a, b] : td.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::function<int(int, int)> build = [&](int t, int parent) {
    std::vector<int> parts;
    for (int c : adj[t]) {
      if (c == parent) continue;
      parts.push_back(morph(build(c, t), td.bags[t]));
    }
    if (parts.empty()) parts.push_back(morph(push(NiceNode{}), td.bags[t]));
    int acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i)
      acc = push(NiceNode{NiceKind::Join, 0, td.bags[t], acc, parts[i]});
    return acc;
  };
  int top = build(0, -1);
  morph(top, {});
  return ntd;
}

TreeDecomposition read_td(std::istream& in) {
  TreeDecomposition td;
  std::string line;
  int lineno = 0;
  bool header = false;
  long nbags = 0, maxbag = 0, n = 0;
  std::vector<char> seen;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c") continue;
    if (first == "s") {
      std::string kind;
      if (header || !(ls >> kind >> nbags >> maxbag >> n) || kind != "td" || nbags < 0 || n < 0)
        throw InputError("header must be 's td <bags> <max bag size> <n>'", lineno, 1);
      header = true;
      td.bags.resize(nbags);
      seen.assign(nbags, 0);
      continue;
    }
    if (!header) throw InputError("content before 's td' header", lineno, 1);
    if (first == "b") {
      long id;
      if (!(ls >> id) || id < 1 || id > nbags) throw InputError("bad bag id", lineno, 3);
      if (seen[id - 1]) throw InputError("bag " + std::to_string(id) + " listed twice", lineno, 3);
      seen[id - 1] = 1;
      long v;
      std::vector<VertexId> bag;
      while (ls >> v) {
        if (v < 1 || v > n) throw InputError("vertex out of range in bag " + std::to_string(id), lineno, 1);
        bag.push_back(static_cast<VertexId>(v - 1));
      }
      if (!ls.eof()) throw InputError("bad token in bag line", lineno, 1);
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      if (static_cast<long>(bag.size()) > maxbag)
        throw InputError("bag " + std::to_string(id) + " exceeds declared size", lineno, 1);
      td.bags[id - 1] = std::move(bag);
      continue;
    }
    long a, b;
    std::istringstream es(line);
    if (!(es >> a >> b) || a < 1 || b < 1 || a > nbags || b > nbags)
      throw InputError("bad tree edge line", lineno, 1);
    td.edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  }
  if (!header) throw InputError("missing 's td' header");
  for (long i = 0; i < nbags; ++i)
    if (!seen[i]) throw InputError("bag " + std::to_string(i + 1) + " never listed");
  return td;
}

TreeDecomposition read_td_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return read_td(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_td(std::ostream& out, const TreeDecomposition& td, std::size_t num_vertices) {
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << num_vertices << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (VertexId v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [a, b] : td.edges) out << a + 1 << ' ' << b + 1 << '\n';
}

}  // namespace mmfvs
