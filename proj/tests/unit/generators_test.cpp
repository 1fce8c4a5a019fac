#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "mmfvs/errors.hpp"
#include "mmfvs/generators.hpp"
#include "mmfvs/oracle.hpp"
#include "shapes.hpp"

using namespace mmfvs;
using namespace mmfvs::testing;

namespace {

// Plain DPLL; the oracle's enumeration stops at 24 variables.
bool dpll(std::vector<Clause> clauses, std::vector<int> assigned) {
  for (;;) {
    bool unit_found = false;
    std::vector<Clause> next;
    for (const Clause& c : clauses) {
      Clause rest;
      bool sat = false;
      for (int lit : c) {
        const int v = assigned[static_cast<std::size_t>(std::abs(lit))];
        if (v == 0) rest.push_back(lit);
        else if ((v > 0) == (lit > 0)) sat = true;
      }
      if (sat) continue;
      if (rest.empty()) return false;
      next.push_back(rest);
    }
    clauses = std::move(next);
    if (clauses.empty()) return true;
    for (const Clause& c : clauses)
      if (c.size() == 1) {
        assigned[static_cast<std::size_t>(std::abs(c[0]))] = c[0] > 0 ? 1 : -1;
        unit_found = true;
        break;
      }
    if (!unit_found) break;
  }
  const int lit = clauses.front().front();
  for (int value : {1, -1}) {
    std::vector<int> a = assigned;
    a[static_cast<std::size_t>(std::abs(lit))] = value;
    if (dpll(clauses, a)) return true;
  }
  return false;
}

bool satisfiable(const CnfFormula& f) {
  return dpll(f.clauses, std::vector<int>(static_cast<std::size_t>(f.num_vars + 1), 0));
}

CnfFormula random_3cnf(int n, int m, std::mt19937_64& rng) {
  CnfFormula f{n, {}};
  for (int c = 0; c < m; ++c) {
    Clause cl;
    const int width = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < width; ++j) {
      const int v = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      cl.push_back(rng() % 2 ? v : -v);
    }
    f.clauses.push_back(cl);
  }
  return f;
}

// Three parts of four variables each; every clause takes one literal per part.
PartitionedCnf four_per_part(int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PartitionedCnf pc;
  pc.formula.num_vars = 12;
  for (int p = 0; p < 3; ++p)
    for (int v = 1; v <= 4; ++v) pc.parts[p].push_back(4 * p + v);
  for (int c = 0; c < m; ++c) {
    Clause cl;
    for (int p = 0; p < 3; ++p) {
      const int v = 4 * p + 1 + static_cast<int>(rng() % 4);
      cl.push_back(rng() % 2 ? v : -v);
    }
    pc.formula.clauses.push_back(cl);
  }
  return pc;
}

}  // namespace

TEST_CASE("force gadget") {
  MultiGraph g = cycle(3);
  const ForceGadget fg = attach_force_gadget(g, 0, 3);
  CHECK(g.num_vertices() == 7);
  CHECK(g.num_edges() == 10);
  CHECK(fg.anchor == 0);
  CHECK(fg.leaves.size() == 3);
  CHECK(g.multiplicity(0, fg.twin) == 1);
  for (VertexId l : fg.leaves) CHECK(g.degree(l) == 2);
  CHECK_THROWS_AS(attach_force_gadget(g, 99, 3), PreconditionError);
}

TEST_CASE("force gadget leaves and twins in minimal solutions") {
  MultiGraph g = cycle(4);
  const ForceGadget fg = attach_force_gadget(g, 0, 2);
  const std::vector<VertexId> vs = g.vertices();
  int minimal = 0;
  for (std::uint32_t bits = 0; bits < (1u << vs.size()); ++bits) {
    VertexSet s;
    for (std::size_t b = 0; b < vs.size(); ++b)
      if ((bits >> b) & 1) s.insert(vs[b]);
    if (!is_minimal_fvs(g, s)) continue;
    ++minimal;
    CHECK_FALSE((s.count(fg.anchor) && s.count(fg.twin)));
    if (s.count(fg.anchor))
      for (VertexId l : fg.leaves) CHECK(s.count(l) == 0);
  }
  CHECK(minimal > 0);
}

TEST_CASE("3-SAT to partitioned 3-SAT") {
  const CnfFormula phi{2, {{1, -2}}};
  const PartitionedCnf pc = sat_to_3p3sat(phi);
  CHECK(pc.formula.clauses.size() == 7);
  CHECK(pc.part_size() == 2);
  CHECK_NOTHROW(pc.validate());

  const PartitionedCnf contradiction = sat_to_3p3sat(CnfFormula{1, {{1}, {-1}}});
  CHECK_FALSE(brute_satisfiable(contradiction.formula).has_value());
  CHECK_THROWS_AS(sat_to_3p3sat(CnfFormula{4, {{1, 2, 3, 4}}}), PreconditionError);
}

TEST_CASE("partitioning preserves satisfiability up to 10 variables") {
  std::mt19937_64 rng(5);
  int sat = 0, unsat = 0;
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + t % 10;
    const CnfFormula phi = random_3cnf(n, 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(4 * n + 2)), rng);
    const PartitionedCnf pc = sat_to_3p3sat(phi);
    pc.validate();
    CHECK(pc.formula.clauses.size() == phi.clauses.size() + 3 * static_cast<std::size_t>(n));
    const bool a = satisfiable(phi);
    CHECK(a == satisfiable(pc.formula));
    if (n <= 4) CHECK(a == brute_satisfiable(pc.formula).has_value());
    (a ? sat : unsat) += 1;
  }
  CHECK(sat > 20);
  CHECK(unsat > 20);
}

TEST_CASE("lower-bound construction with four variables per part") {
  const PartitionedCnf pc = four_per_part(5, 1);
  const EthConstruction ec = gen_eth_instance(pc);
  const EthParams& p = ec.params;
  CHECK(p.n == 4);
  CHECK(p.log_n == 2);
  CHECK(p.L == 1);
  CHECK(p.R == 2);
  CHECK(p.A == 16 + 5);
  CHECK(p.k == 600 + 37 * 5);
  CHECK(ec.gadgets.size() == 6);
  for (const ChoiceGadget& cg : ec.gadgets) {
    CHECK(cg.ell.size() + cg.ellp.size() + cg.kappa.size() + cg.lambda.size() + cg.r.size() +
              cg.mid.size() * cg.mid[0].size() ==
          14);
    CHECK(cg.forces.size() == 6);
  }
  const EthReport rep = verify_eth(ec);
  CHECK(rep.ok());
  CHECK(rep.vc_bound == 96);
  CHECK(rep.vc_size <= static_cast<std::size_t>(rep.vc_bound));

  const auto a = brute_satisfiable(pc.formula);
  REQUIRE(a.has_value());
  const Witness w = constructive_witness(ec, *a);
  CHECK(static_cast<long long>(w.solution.size()) == p.k);
  CHECK(check_witness(ec.graph, w).ok);
  CHECK(verify_eth_solution(ec, w.solution).empty());

  // A clause vertex owes its private cycle to one ell, mid and r vertex, so
  // dropping it from the witness leaves that cycle uncovered.
  const VertexId c = ec.clause_vertices.front();
  const auto pcyc = private_cycles(ec.graph, w.solution);
  REQUIRE(pcyc.has_value());
  REQUIRE(pcyc->at(c).size() == 4);
  const auto roles = eth_roles(ec);
  std::multiset<std::string> on_cycle;
  for (VertexId x : pcyc->at(c)) on_cycle.insert(roles.at(x));
  CHECK(on_cycle == std::multiset<std::string>{"clause", "ell", "mid", "r"});
  VertexSet without = w.solution;
  without.erase(c);
  CHECK_FALSE(is_fvs(ec.graph, without));
  CHECK(is_minimal_fvs(ec.graph, w.solution));

  std::vector<bool> wrong(13, false);
  if (!pc.formula.satisfied_by(wrong)) CHECK_THROWS_AS(constructive_witness(ec, wrong), PreconditionError);
}

TEST_CASE("a missing kappa-lambda edge is a named violation") {
  EthConstruction ec = gen_eth_instance(four_per_part(3, 2));
  const VertexId kappa = ec.gadgets[0].kappa[0];
  VertexId lambda = kappa;
  for (auto [x, m] : ec.graph.neighbors(kappa))
    if (std::find(ec.gadgets[0].lambda.begin(), ec.gadgets[0].lambda.end(), x) != ec.gadgets[0].lambda.end()) lambda = x;
  REQUIRE(lambda != kappa);
  ec.graph.remove_edge(kappa, lambda);
  const EthReport rep = verify_eth(ec);
  CHECK_FALSE(rep.ok());
  const bool named = std::any_of(rep.violations.begin(), rep.violations.end(),
                                 [](const std::string& v) { return v.find("kappa-lambda edge missing") != std::string::npos; });
  CHECK(named);
}

TEST_CASE("padding small parts") {
  PartitionedCnf pc;
  pc.formula = CnfFormula{3, {{1, -2, 3}}};
  pc.parts[0] = {1};
  pc.parts[1] = {2};
  pc.parts[2] = {3};
  const EthConstruction ec = gen_eth_instance(pc);
  CHECK(ec.params.n == 4);
  CHECK(ec.params.n_input == 1);
  CHECK(verify_eth(ec).ok());
  const Witness w = constructive_witness(ec, {false, true, true, false});
  CHECK(static_cast<long long>(w.solution.size()) == ec.params.k);
}

TEST_CASE("colouring reduction shape") {
  const ColoringInstance ci = coloring_to_annotated(complete(3));
  CHECK(ci.instance.graph().num_vertices() == 1 + 9 + 9);
  CHECK(ci.instance.k() == 12);
  CHECK(is_path_restricted(ci.instance));
  for (const auto& p : interesting_paths(ci.instance)) CHECK(p.size() == 3);
  CHECK(ci.instance.f() == VertexSet{ci.w});
  CHECK(ci.instance.s().size() == 9);

  MultiGraph loop(1);
  loop.add_edge(0, 0);
  CHECK_THROWS_AS(coloring_to_annotated(loop), PreconditionError);
  MultiGraph doubled(2);
  doubled.add_edge(0, 1, 2);
  CHECK_THROWS_AS(coloring_to_annotated(doubled), PreconditionError);
}

TEST_CASE("colouring reduction answers") {
  const ColoringInstance k3 = coloring_to_annotated(complete(3));
  const OracleResult r3 = brute_annotated(k3.instance.graph(), k3.instance.s(), k3.instance.f());
  CHECK(r3.optimum >= 12);
  const ColoringInstance k1 = coloring_to_annotated(MultiGraph(1));
  CHECK(k1.instance.k() == 1);
  CHECK(brute_annotated(k1.instance.graph(), k1.instance.s(), k1.instance.f()).decides(1));
}

TEST_CASE("k-in-a-tree reduction") {
  const ExtensionInstance p3 = k_in_tree_to_extension(path(3), {0, 1, 2});
  CHECK(p3.graph.num_vertices() == 5);
  CHECK(p3.s.size() == 2);
  CHECK(brute_extension(p3.graph, p3.s).optimum >= 0);

  const ExtensionInstance k3 = k_in_tree_to_extension(complete(3), {0, 1, 2});
  CHECK(brute_extension(k3.graph, k3.s).optimum == -1);

  CHECK_THROWS_AS(k_in_tree_to_extension(path(3), {0}), PreconditionError);
  CHECK_THROWS_AS(k_in_tree_to_extension(path(3), {0, 5}), PreconditionError);
}

TEST_CASE("random generators are deterministic and valid") {
  CHECK(random_erdos_renyi(8, 0.5, 1) == random_erdos_renyi(8, 0.5, 1));
  CHECK(random_sparse(30, 5, 4) == random_sparse(30, 5, 4));
  const MultiGraph sp = random_sparse(30, 5, 4);
  CHECK(sp.num_edges() == 29 + 5);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const AnnotatedInstance pr = random_path_restricted(RandomPathProfile{}, seed);
    CHECK(is_path_restricted(pr));
    RandomAnnotatedProfile prof;
    prof.parallel = 0.2;
    const AnnotatedInstance ai = random_annotated(prof, seed);
    VertexSet sf = ai.s();
    for (VertexId f : ai.f()) sf.insert(f);
    CHECK(is_fvs(ai.graph(), sf));
    CHECK(forest_is_acyclic(ai));
    CHECK(random_annotated(prof, seed).graph() == ai.graph());
  }
}
