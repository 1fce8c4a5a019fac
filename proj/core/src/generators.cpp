#include "mmfvs/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>

#include "mmfvs/errors.hpp"
#include "mmfvs/union_find.hpp"

namespace mmfvs {

ForceGadget attach_force_gadget(MultiGraph& g, VertexId u, int a) {
  if (!g.has_vertex(u)) throw PreconditionError("attach_force_gadget: unknown vertex " + std::to_string(u));
  if (a < 1) throw PreconditionError("attach_force_gadget: A must be at least 1");
  ForceGadget fg;
  fg.anchor = u;
  fg.twin = g.add_vertex();
  g.add_edge(u, fg.twin);
  fg.leaves.reserve(static_cast<std::size_t>(a));
  for (int i = 0; i < a; ++i) {
    const VertexId leaf = g.add_vertex();
    g.add_edge(u, leaf);
    g.add_edge(fg.twin, leaf);
    fg.leaves.push_back(leaf);
  }
  return fg;
}

PartitionedCnf sat_to_3p3sat(const CnfFormula& phi) {
  phi.validate(3);
  const int n = phi.num_vars;
  PartitionedCnf out;
  out.formula.num_vars = 3 * n;
  auto copy = [n](int lit, int part) {
    const int x = std::abs(lit) + part * n;
    return lit < 0 ? -x : x;
  };
  for (const Clause& c : phi.clauses) {
    Clause d;
    for (std::size_t j = 0; j < c.size(); ++j) d.push_back(copy(c[j], static_cast<int>(j)));
    out.formula.clauses.push_back(std::move(d));
  }
  for (int x = 1; x <= n; ++x) {
    out.formula.clauses.push_back({-x, x + n});
    out.formula.clauses.push_back({-(x + n), x + 2 * n});
    out.formula.clauses.push_back({-(x + 2 * n), x});
  }
  for (int p = 0; p < 3; ++p)
    for (int x = 1; x <= n; ++x) out.parts[p].push_back(x + p * n);
  return out;
}

// ---- lower-bound construction ---------------------------------------------

namespace {

int ilog2(long long n) {
  int r = 0;
  while ((1LL << (r + 1)) <= n) ++r;
  return r;
}

std::string gadget_name(const ChoiceGadget& cg) {
  return "gadget p=" + std::to_string(cg.part + 1) + " q=" + std::to_string(cg.group + 1);
}

// Value of bit `bit` in the encoded assignment j of a block.
bool encoded_value(int j, int bit) { return ((j >> bit) & 1) != 0; }

// Clause-vertex neighbourhood implied by the formula and the placement.
std::set<VertexId> expected_clause_neighbors(const EthConstruction& ec, const Clause& c) {
  std::set<VertexId> out;
  for (int lit : c) {
    const auto it = ec.placement.find(std::abs(lit));
    if (it == ec.placement.end()) continue;
    const auto [gi, alpha, bit] = it->second;
    const ChoiceGadget& cg = ec.gadgets[static_cast<std::size_t>(gi)];
    out.insert(cg.ell[static_cast<std::size_t>(alpha)]);
    const int width = static_cast<int>(cg.blocks[static_cast<std::size_t>(alpha)].size());
    const int assignments = std::min(ec.params.R, 1 << width);
    for (int j = 0; j < assignments; ++j)
      if (encoded_value(j, bit) == (lit > 0)) out.insert(cg.r[static_cast<std::size_t>(j)]);
  }
  return out;
}

std::set<VertexId> neighbor_set(const MultiGraph& g, VertexId v) {
  std::set<VertexId> out;
  for (auto [x, m] : g.neighbors(v)) out.insert(x);
  return out;
}

}  // namespace

EthConstruction gen_eth_instance(const PartitionedCnf& pc) {
  pc.validate();
  EthConstruction ec;
  ec.formula = pc;
  const int n_in = pc.part_size();
  int n = 4;
  while (n < n_in) n *= 4;
  for (int p = 0; p < 3; ++p)
    while (static_cast<int>(ec.formula.parts[p].size()) < n)
      ec.formula.parts[p].push_back(++ec.formula.formula.num_vars);

  EthParams& P = ec.params;
  P.n = n;
  P.n_input = n_in;
  P.m = static_cast<int>(pc.formula.clauses.size());
  P.log_n = ilog2(n);
  P.L = (n + P.log_n * P.log_n - 1) / (P.log_n * P.log_n);
  P.R = 1 << (P.log_n / 2);
  P.A = static_cast<long long>(n) * n + P.m;
  P.k = (4 * P.A * P.L + P.A * P.R + 2LL * P.L * P.R) * 3 * P.log_n + P.m;

  MultiGraph& g = ec.graph;
  const int two_l = 2 * P.L;
  auto make = [&g](const char* role) {
    const VertexId v = g.add_vertex();
    g.set_label(v, role);
    return v;
  };

  for (int p = 0; p < 3; ++p) {
    for (int q = 0; q < P.log_n; ++q) {
      ChoiceGadget cg;
      cg.part = p;
      cg.group = q;
      for (int i = 0; i < two_l; ++i) cg.ell.push_back(make("ell"));
      for (int i = 0; i < two_l; ++i) cg.ellp.push_back(make("ellp"));
      for (int i = 0; i < two_l; ++i) cg.kappa.push_back(make("kappa"));
      for (int i = 0; i < two_l; ++i) cg.lambda.push_back(make("lambda"));
      for (int j = 0; j < P.R; ++j) cg.r.push_back(make("r"));
      cg.mid.assign(static_cast<std::size_t>(two_l), {});
      for (int i = 0; i < two_l; ++i)
        for (int j = 0; j < P.R; ++j) cg.mid[i].push_back(make("mid"));
      for (int i = 0; i < two_l; ++i) {
        g.add_edge(cg.kappa[i], cg.lambda[i]);
        for (int j = 0; j < P.R; ++j) {
          const VertexId m = cg.mid[i][j];
          g.add_edge(m, cg.kappa[i]);
          g.add_edge(m, cg.lambda[i]);
          g.add_edge(m, cg.ell[i]);
          g.add_edge(m, cg.ellp[i]);
          g.add_edge(m, cg.r[j]);
        }
      }
      std::vector<VertexId> anchors = cg.ell;
      anchors.insert(anchors.end(), cg.ellp.begin(), cg.ellp.end());
      anchors.insert(anchors.end(), cg.r.begin(), cg.r.end());
      for (VertexId a : anchors) {
        ForceGadget fg = attach_force_gadget(g, a, static_cast<int>(P.A));
        g.set_label(fg.twin, "twin");
        for (VertexId leaf : fg.leaves) g.set_label(leaf, "leaf");
        cg.forces.push_back(std::move(fg));
      }
      cg.blocks.assign(static_cast<std::size_t>(two_l), {});
      ec.gadgets.push_back(std::move(cg));
    }
  }

  // Round-robin: part index -> group, group position -> block.
  for (int p = 0; p < 3; ++p) {
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(P.log_n));
    const auto& vars = ec.formula.parts[p];
    for (std::size_t idx = 0; idx < vars.size(); ++idx)
      groups[idx % static_cast<std::size_t>(P.log_n)].push_back(vars[idx]);
    for (int q = 0; q < P.log_n; ++q) {
      const int gi = p * P.log_n + q;
      ChoiceGadget& cg = ec.gadgets[static_cast<std::size_t>(gi)];
      const auto& grp = groups[static_cast<std::size_t>(q)];
      for (std::size_t pos = 0; pos < grp.size(); ++pos) {
        const int alpha = static_cast<int>(pos % static_cast<std::size_t>(two_l));
        auto& block = cg.blocks[static_cast<std::size_t>(alpha)];
        ec.placement[grp[pos]] = {gi, alpha, static_cast<int>(block.size())};
        block.push_back(grp[pos]);
      }
      for (const auto& block : cg.blocks)
        if (2 * static_cast<int>(block.size()) > P.log_n)
          throw std::logic_error("gen_eth_instance: block larger than log n / 2");
    }
  }

  for (const Clause& c : ec.formula.formula.clauses) {
    const VertexId cv = make("clause");
    ec.clause_vertices.push_back(cv);
    for (VertexId x : expected_clause_neighbors(ec, c)) g.add_edge(cv, x);
  }
  return ec;
}

std::map<VertexId, std::string> eth_roles(const EthConstruction& ec) { return ec.graph.labels(); }

EthReport verify_eth(const EthConstruction& ec) {
  EthReport rep;
  const EthParams& P = ec.params;
  const MultiGraph& g = ec.graph;
  auto fail = [&rep](std::string s) { rep.violations.push_back(std::move(s)); };

  // parameters
  if (P.n < 4 || (P.n & (P.n - 1)) != 0 || ilog2(P.n) % 2 != 0) fail("params: n is not a power of 4");
  if (P.n != ec.formula.part_size()) fail("params: n differs from the padded part size");
  if ((1 << P.log_n) != P.n) fail("params: log n");
  if (P.log_n > 0 && P.L != (P.n + P.log_n * P.log_n - 1) / (P.log_n * P.log_n)) fail("params: L");
  if (static_cast<long long>(P.R) * P.R != P.n) fail("params: R");
  if (P.m != static_cast<int>(ec.formula.formula.clauses.size())) fail("params: m");
  if (P.A != static_cast<long long>(P.n) * P.n + P.m) fail("params: A");
  if (P.k != (4 * P.A * P.L + P.A * P.R + 2LL * P.L * P.R) * 3 * P.log_n + P.m) fail("params: k");
  if (!rep.ok()) return rep;

  const std::size_t two_l = static_cast<std::size_t>(2 * P.L);
  const std::size_t R = static_cast<std::size_t>(P.R);
  if (ec.gadgets.size() != static_cast<std::size_t>(3 * P.log_n)) {
    fail("gadget count differs from 3 log n");
    return rep;
  }
  if (ec.clause_vertices.size() != static_cast<std::size_t>(P.m)) {
    fail("clause vertex count differs from m");
    return rep;
  }

  std::set<VertexId> clause_set(ec.clause_vertices.begin(), ec.clause_vertices.end());
  std::set<VertexId> seen;
  std::vector<VertexId> cover;
  auto claim = [&](VertexId v, const std::string& what) {
    if (!g.has_vertex(v)) {
      fail(what + ": vertex " + std::to_string(v) + " missing");
      return false;
    }
    if (!seen.insert(v).second) fail(what + ": vertex " + std::to_string(v) + " reused");
    if (g.self_loops(v) != 0) fail(what + ": self-loop on " + std::to_string(v));
    for (auto [x, m] : g.neighbors(v))
      if (m != 1) fail(what + ": parallel edge at " + std::to_string(v));
    return true;
  };
  auto expect_nbrs = [&](VertexId v, const std::set<VertexId>& want, const std::string& what) {
    if (!g.has_vertex(v)) return;
    if (neighbor_set(g, v) != want) fail(what + ": neighbourhood of " + std::to_string(v) + " is wrong");
  };

  // clause neighbours of each ell / r, collected from the clause side
  std::map<VertexId, std::set<VertexId>> clause_nbrs;
  for (VertexId c : ec.clause_vertices)
    if (g.has_vertex(c))
      for (auto [x, m] : g.neighbors(c)) clause_nbrs[x].insert(c);

  for (const ChoiceGadget& cg : ec.gadgets) {
    const std::string name = gadget_name(cg);
    if (cg.ell.size() != two_l || cg.ellp.size() != two_l || cg.kappa.size() != two_l ||
        cg.lambda.size() != two_l || cg.r.size() != R || cg.mid.size() != two_l ||
        cg.blocks.size() != two_l) {
      fail(name + ": wrong number of ell/ellp/kappa/lambda/r vertices");
      continue;
    }
    bool shape = true;
    for (const auto& row : cg.mid) shape = shape && row.size() == R;
    if (!shape || cg.forces.size() != 2 * two_l + R) {
      fail(name + ": wrong number of mid vertices or force gadgets");
      continue;
    }
    const std::size_t core = 4 * two_l + R + two_l * R;
    if (core != static_cast<std::size_t>(8 * P.L + P.R + 2 * P.L * P.R)) fail(name + ": core vertex count");

    std::map<VertexId, const ForceGadget*> force_of;
    for (const ForceGadget& fg : cg.forces) force_of[fg.anchor] = &fg;
    auto gadget_part = [&](VertexId anchor) {
      std::set<VertexId> out;
      auto it = force_of.find(anchor);
      if (it == force_of.end()) return out;
      out.insert(it->second->twin);
      out.insert(it->second->leaves.begin(), it->second->leaves.end());
      return out;
    };

    for (std::size_t i = 0; i < two_l; ++i) {
      const std::string ci = name + " i=" + std::to_string(i + 1);
      claim(cg.ell[i], ci + " ell");
      claim(cg.ellp[i], ci + " ellp");
      claim(cg.kappa[i], ci + " kappa");
      claim(cg.lambda[i], ci + " lambda");
      std::set<VertexId> Mi(cg.mid[i].begin(), cg.mid[i].end());
      for (VertexId m : cg.mid[i]) claim(m, ci + " mid");

      if (g.has_vertex(cg.kappa[i]) && g.has_vertex(cg.lambda[i]) &&
          g.multiplicity(cg.kappa[i], cg.lambda[i]) == 0)
        fail(ci + ": kappa-lambda edge missing");
      std::set<VertexId> want = Mi;
      want.insert(cg.lambda[i]);
      expect_nbrs(cg.kappa[i], want, ci + " N(kappa) = M_i + lambda");
      want = Mi;
      want.insert(cg.kappa[i]);
      expect_nbrs(cg.lambda[i], want, ci + " N(lambda) = M_i + kappa");
      for (std::size_t j = 0; j < R; ++j)
        expect_nbrs(cg.mid[i][j], {cg.ell[i], cg.ellp[i], cg.r[j], cg.kappa[i], cg.lambda[i]},
                    ci + " j=" + std::to_string(j + 1) + " mid edges");

      want = Mi;
      for (VertexId x : gadget_part(cg.ell[i])) want.insert(x);
      for (VertexId c : clause_nbrs[cg.ell[i]]) want.insert(c);
      expect_nbrs(cg.ell[i], want, ci + " ell edges");
      want = Mi;
      for (VertexId x : gadget_part(cg.ellp[i])) want.insert(x);
      expect_nbrs(cg.ellp[i], want, ci + " ellp edges");
    }
    for (std::size_t j = 0; j < R; ++j) {
      const std::string cj = name + " j=" + std::to_string(j + 1);
      claim(cg.r[j], cj + " r");
      std::set<VertexId> want;
      for (std::size_t i = 0; i < two_l; ++i) want.insert(cg.mid[i][j]);
      for (VertexId x : gadget_part(cg.r[j])) want.insert(x);
      for (VertexId c : clause_nbrs[cg.r[j]]) want.insert(c);
      expect_nbrs(cg.r[j], want, cj + " r edges");
    }

    // force gadgets on exactly the ell, ellp and r vertices
    std::set<VertexId> anchors(cg.ell.begin(), cg.ell.end());
    anchors.insert(cg.ellp.begin(), cg.ellp.end());
    anchors.insert(cg.r.begin(), cg.r.end());
    std::set<VertexId> forced;
    for (const ForceGadget& fg : cg.forces) {
      const std::string cf = name + " force gadget on " + std::to_string(fg.anchor);
      forced.insert(fg.anchor);
      if (static_cast<long long>(fg.leaves.size()) != P.A) fail(cf + ": leaf count differs from A");
      if (!claim(fg.twin, cf + " twin")) continue;
      std::set<VertexId> want(fg.leaves.begin(), fg.leaves.end());
      want.insert(fg.anchor);
      expect_nbrs(fg.twin, want, cf + " twin edges");
      for (VertexId leaf : fg.leaves) {
        if (!claim(leaf, cf + " leaf")) continue;
        expect_nbrs(leaf, {fg.anchor, fg.twin}, cf + " leaf edges");
      }
      cover.push_back(fg.twin);
    }
    if (forced != anchors) fail(name + ": force gadgets are not on exactly the ell, ellp and r vertices");

    for (VertexId v : cg.ell) cover.push_back(v);
    for (VertexId v : cg.ellp) cover.push_back(v);
    for (VertexId v : cg.kappa) cover.push_back(v);
    for (VertexId v : cg.lambda) cover.push_back(v);
    for (VertexId v : cg.r) cover.push_back(v);

    for (const auto& block : cg.blocks)
      if (2 * static_cast<int>(block.size()) > P.log_n) fail(name + ": block larger than log n / 2");
  }

  // variable blocks
  std::set<int> placed;
  for (int p = 0; p < 3; ++p)
    for (int x : ec.formula.parts[p]) {
      const auto it = ec.placement.find(x);
      if (it == ec.placement.end()) {
        fail("variable " + std::to_string(x) + " is in no block");
        continue;
      }
      const auto [gi, alpha, bit] = it->second;
      if (gi / P.log_n != p) fail("variable " + std::to_string(x) + " placed outside its part");
      const auto& blocks = ec.gadgets[static_cast<std::size_t>(gi)].blocks;
      if (alpha < 0 || alpha >= static_cast<int>(blocks.size()) || bit < 0 ||
          bit >= static_cast<int>(blocks[static_cast<std::size_t>(alpha)].size()) ||
          blocks[static_cast<std::size_t>(alpha)][static_cast<std::size_t>(bit)] != x)
        fail("variable " + std::to_string(x) + " placement disagrees with its block");
      placed.insert(x);
    }
  if (placed.size() != static_cast<std::size_t>(3 * P.n)) fail("blocks do not partition the variables");

  // clause vertices
  for (std::size_t c = 0; c < ec.clause_vertices.size(); ++c) {
    const VertexId cv = ec.clause_vertices[c];
    if (!claim(cv, "clause " + std::to_string(c + 1))) continue;
    expect_nbrs(cv, expected_clause_neighbors(ec, ec.formula.formula.clauses[c]),
                "clause " + std::to_string(c + 1) + " edges");
  }

  const std::size_t per_gadget = 4 * two_l + R + two_l * R + (2 * two_l + R) * static_cast<std::size_t>(P.A + 1);
  if (g.num_vertices() != per_gadget * ec.gadgets.size() + ec.clause_vertices.size())
    fail("graph has vertices outside the construction");

  // vertex-cover certificate: every edge has an endpoint in the cover
  rep.vc_size = cover.size();
  rep.vc_bound = (8LL * P.L + 2LL * P.R + 4LL * P.L) * 3 * P.log_n;
  const VertexMask in_cover = g.mask_of(VertexSet(cover.begin(), cover.end()));
  for (VertexId v : g.vertices()) {
    if (in_cover[v]) continue;
    for (auto [x, m] : g.neighbors(v))
      if (!in_cover[x]) {
        fail("vc certificate: edge " + std::to_string(v) + "-" + std::to_string(x) + " uncovered");
        break;
      }
  }
  if (static_cast<long long>(rep.vc_size) > rep.vc_bound) fail("vc certificate exceeds its bound");
  return rep;
}

std::vector<std::string> verify_eth_solution(const EthConstruction& ec, const VertexSet& s) {
  std::vector<std::string> out;
  const EthParams& P = ec.params;
  const long long want = 4 * P.A * P.L + P.A * P.R + 2LL * P.L * P.R;
  for (const ChoiceGadget& cg : ec.gadgets) {
    const std::string name = gadget_name(cg);
    long long inside = 0;
    auto count = [&](VertexId v) { inside += s.count(v) ? 1 : 0; };
    for (const ForceGadget& fg : cg.forces) {
      if (s.count(fg.anchor)) out.push_back(name + ": anchor " + std::to_string(fg.anchor) + " in solution");
      if (s.count(fg.twin)) out.push_back(name + ": twin " + std::to_string(fg.twin) + " in solution");
      count(fg.anchor);
      count(fg.twin);
      for (VertexId leaf : fg.leaves) count(leaf);
    }
    for (std::size_t i = 0; i < cg.mid.size(); ++i) {
      int outside = 0;
      for (VertexId m : cg.mid[i]) {
        outside += s.count(m) ? 0 : 1;
        count(m);
      }
      if (outside > 1) out.push_back(name + " i=" + std::to_string(i + 1) + ": |M_i \\ S| > 1");
      count(cg.kappa[i]);
      count(cg.lambda[i]);
    }
    if (inside != want)
      out.push_back(name + ": solution meets the gadget in " + std::to_string(inside) + " vertices, expected " +
                    std::to_string(want));
  }
  return out;
}

Witness constructive_witness(const EthConstruction& ec, const std::vector<bool>& assignment) {
  const int nv = ec.formula.formula.num_vars;
  std::vector<bool> full(static_cast<std::size_t>(nv + 1), true);
  for (std::size_t i = 1; i < assignment.size() && i < full.size(); ++i) full[i] = assignment[i];
  if (!ec.formula.formula.satisfied_by(full))
    throw PreconditionError("constructive_witness: assignment does not satisfy the formula");

  VertexSet s;
  for (const ChoiceGadget& cg : ec.gadgets) {
    for (const ForceGadget& fg : cg.forces) s.insert(fg.leaves.begin(), fg.leaves.end());
    s.insert(cg.kappa.begin(), cg.kappa.end());
    for (std::size_t a = 0; a < cg.blocks.size(); ++a) {
      int beta = 0;
      for (std::size_t bit = 0; bit < cg.blocks[a].size(); ++bit)
        if (full[static_cast<std::size_t>(cg.blocks[a][bit])]) beta |= 1 << bit;
      for (std::size_t j = 0; j < cg.mid[a].size(); ++j)
        if (static_cast<int>(j) != beta) s.insert(cg.mid[a][j]);
    }
  }
  s.insert(ec.clause_vertices.begin(), ec.clause_vertices.end());
  if (static_cast<long long>(s.size()) != ec.params.k)
    throw std::logic_error("constructive_witness: size " + std::to_string(s.size()) + " differs from k");
  return make_witness(ec.graph, s);
}

// ---- 3-colouring ----------------------------------------------------------

ColoringInstance coloring_to_annotated(const MultiGraph& g) {
  const std::vector<VertexId> vs = g.vertices();
  std::map<VertexId, int> index;
  for (VertexId v : vs) index[v] = static_cast<int>(index.size());
  std::vector<std::pair<int, int>> edges;
  for (VertexId v : vs) {
    if (g.self_loops(v) != 0) throw PreconditionError("coloring_to_annotated: input has a self-loop");
    for (auto [x, m] : g.neighbors(v)) {
      if (m != 1) throw PreconditionError("coloring_to_annotated: input has parallel edges");
      if (v < x) edges.emplace_back(index[v], index[x]);
    }
  }
  const int n = static_cast<int>(vs.size());
  const int m = static_cast<int>(edges.size());

  MultiGraph h;
  std::map<VertexId, std::string> roles;
  const VertexId w = h.add_vertex();
  roles[w] = "w";
  std::vector<std::vector<VertexId>> u(static_cast<std::size_t>(n)), e(static_cast<std::size_t>(m));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < 3; ++j) {
      const VertexId x = h.add_vertex();
      roles[x] = "u" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      u[i].push_back(x);
    }
    h.add_edge(w, u[i][0]);
    h.add_edge(u[i][0], u[i][1]);
    h.add_edge(u[i][1], u[i][2]);
    h.add_edge(u[i][2], w);
  }
  VertexSet s;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < 3; ++j) {
      const VertexId x = h.add_vertex();
      roles[x] = "e" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      e[i].push_back(x);
      s.insert(x);
      h.add_edge(x, w);
      h.add_edge(x, u[edges[i].first][j]);
      h.add_edge(x, u[edges[i].second][j]);
    }
  }
  for (const auto& [v, r] : roles) h.set_label(v, r);
  ColoringInstance out{AnnotatedInstance::make(std::move(h), s, {w}, n + 3 * m), w, std::move(u), std::move(e),
                       std::move(roles)};
  return out;
}

ExtensionInstance k_in_tree_to_extension(const MultiGraph& g, const std::vector<VertexId>& terminals) {
  if (terminals.size() < 2) throw PreconditionError("k_in_tree_to_extension: need at least two terminals");
  std::set<VertexId> distinct;
  for (VertexId t : terminals) {
    if (!g.has_vertex(t)) throw PreconditionError("k_in_tree_to_extension: terminal " + std::to_string(t) + " not in graph");
    if (!distinct.insert(t).second) throw PreconditionError("k_in_tree_to_extension: repeated terminal");
  }
  ExtensionInstance out{g, {}};
  for (std::size_t i = 0; i + 1 < terminals.size(); ++i) {
    const VertexId s = out.graph.add_vertex();
    out.graph.add_edge(s, terminals[i]);
    out.graph.add_edge(s, terminals[i + 1]);
    out.s.insert(s);
  }
  return out;
}

// ---- random ---------------------------------------------------------------

MultiGraph random_erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 0) throw PreconditionError("erdos-renyi: negative n");
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("erdos-renyi: p outside [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  MultiGraph g(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  return g;
}

MultiGraph random_sparse(int n, int extra, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("sparse: n must be positive");
  const long long room = static_cast<long long>(n) * (n - 1) / 2 - (n - 1);
  if (extra < 0 || extra > room) throw PreconditionError("sparse: extra edge count out of range");
  std::mt19937_64 rng(seed);
  MultiGraph g(static_cast<std::size_t>(n));
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    g.add_edge(static_cast<VertexId>(pick(rng)), static_cast<VertexId>(v));
  }
  std::uniform_int_distribution<int> any(0, n - 1);
  for (int added = 0; added < extra;) {
    const auto a = static_cast<VertexId>(any(rng)), b = static_cast<VertexId>(any(rng));
    if (a == b || g.multiplicity(a, b) != 0) continue;
    g.add_edge(a, b);
    ++added;
  }
  return g;
}

AnnotatedInstance random_annotated(const RandomAnnotatedProfile& prof, std::uint64_t seed) {
  if (prof.n < 0 || prof.s_count < 0 || prof.f_count < 0 || prof.s_count + prof.f_count > prof.n)
    throw PreconditionError("random-annotated: |S| + |F| must fit in n");
  if (!(prof.p >= 0.0 && prof.p <= 1.0) || !(prof.parallel >= 0.0 && prof.parallel <= 1.0))
    throw PreconditionError("random-annotated: probabilities outside [0,1]");
  std::mt19937_64 rng(seed);
  const int n = prof.n;
  std::vector<VertexId> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Role> role(static_cast<std::size_t>(n), Role::U);
  VertexSet s, f;
  for (int i = 0; i < prof.s_count; ++i) {
    role[perm[i]] = Role::S;
    s.insert(perm[i]);
  }
  for (int i = prof.s_count; i < prof.s_count + prof.f_count; ++i) {
    role[perm[i]] = Role::F;
    f.insert(perm[i]);
  }

  std::bernoulli_distribution coin(prof.p), twice(prof.parallel);
  MultiGraph g(static_cast<std::size_t>(n));
  DisjointSets forest(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!coin(rng)) continue;
      const Role ra = role[a], rb = role[b];
      if (ra == rb && ra != Role::S) {
        if (forest.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b)))
          g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
      } else {
        g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b), twice(rng) ? 2 : 1);
      }
    }
  const int k = prof.k >= 0 ? prof.k : std::uniform_int_distribution<int>(0, n)(rng);
  return AnnotatedInstance::make(std::move(g), s, f, k);
}

AnnotatedInstance random_path_restricted(const RandomPathProfile& prof, std::uint64_t seed) {
  if (prof.f_count < 1) throw PreconditionError("random-path-restricted: need at least one F vertex");
  if (prof.paths < 0 || prof.max_path_len < 1 || prof.s_count < 0)
    throw PreconditionError("random-path-restricted: invalid path or S parameters");
  std::mt19937_64 rng(seed);
  MultiGraph g;
  VertexSet f, s;
  std::vector<VertexId> fu;
  for (int i = 0; i < prof.f_count; ++i) {
    const VertexId v = g.add_vertex();
    f.insert(v);
    fu.push_back(v);
  }
  std::bernoulli_distribution coin(0.5);
  for (int i = 1; i < prof.f_count; ++i)
    if (coin(rng)) g.add_edge(std::uniform_int_distribution<VertexId>(0, static_cast<VertexId>(i - 1))(rng),
                              static_cast<VertexId>(i));
  std::uniform_int_distribution<VertexId> pick_f(0, static_cast<VertexId>(prof.f_count - 1));
  std::uniform_int_distribution<int> pick_len(1, prof.max_path_len);
  for (int p = 0; p < prof.paths; ++p) {
    const int len = pick_len(rng);
    std::vector<VertexId> path;
    for (int i = 0; i < len; ++i) {
      path.push_back(g.add_vertex());
      fu.push_back(path.back());
      if (i > 0) g.add_edge(path[i - 1], path[i]);
    }
    g.add_edge(path.front(), pick_f(rng));
    g.add_edge(path.back(), pick_f(rng));
  }
  std::uniform_int_distribution<std::size_t> pick_fu(0, fu.size() - 1);
  std::uniform_int_distribution<int> pick_deg(2, 4);
  for (int i = 0; i < prof.s_count; ++i) {
    const VertexId v = g.add_vertex();
    s.insert(v);
    const int d = pick_deg(rng);
    for (int e = 0; e < d; ++e) g.add_edge(v, fu[pick_fu(rng)]);
  }
  const int relevant = static_cast<int>(g.num_vertices()) - prof.f_count;
  const int k = prof.k >= 0 ? prof.k : std::uniform_int_distribution<int>(0, relevant)(rng);
  return AnnotatedInstance::make(std::move(g), s, f, k);
}

}  // namespace mmfvs
