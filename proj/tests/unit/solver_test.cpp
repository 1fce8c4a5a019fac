#include "doctest.h"
#include "mmfvs/errors.hpp"
#include "mmfvs/generators.hpp"
#include "mmfvs/oracle.hpp"
#include "mmfvs/solver.hpp"
#include "shapes.hpp"

using namespace mmfvs;
using namespace mmfvs::testing;

namespace {

SolveResult run(const MultiGraph& g, int k, bool reverse = false) {
  SolveConfig cfg;
  cfg.k = k;
  cfg.reverse_roots = reverse;
  return solve(g, cfg);
}

}  // namespace

TEST_CASE("initial minimal FVS") {
  CHECK(initial_minimal_fvs(path(5)).empty());
  CHECK(initial_minimal_fvs(cycle(4)).size() == 1);
  CHECK(initial_minimal_fvs(complete(4)).size() == 2);
  CHECK(is_minimal_fvs(complete(6), initial_minimal_fvs(complete(6))));
}

TEST_CASE("K_{2,n} has a minimal FVS of size n-1 and none larger") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    const MultiGraph g = k2n(n);
    const SolveResult yes = run(g, n - 1);
    REQUIRE(yes.yes());
    CHECK(yes.witness->solution.size() >= static_cast<std::size_t>(n - 1));
    CHECK(check_witness(g, *yes.witness).ok);
    CHECK_FALSE(run(g, n).yes());
  }
}

TEST_CASE("small decisions") {
  CHECK(run(complete(4), 2).yes());
  CHECK_FALSE(run(complete(4), 3).yes());
  const SolveResult zero = run(cycle(5), 0);
  REQUIRE(zero.yes());
  CHECK(is_minimal_fvs(cycle(5), zero.witness->solution));
  CHECK(run(path(4), 0).yes());
  CHECK_FALSE(run(path(4), 1).yes());
  CHECK_THROWS_AS(run(path(4), -1), PreconditionError);
}

TEST_CASE("self-loops and parallel edges in the input") {
  MultiGraph g(3);
  g.add_edge(0, 0);
  g.add_edge(1, 2, 2);
  const SolveResult r = run(g, 2);
  REQUIRE(r.yes());
  CHECK(r.witness->solution.count(0) == 1);
  CHECK_FALSE(run(g, 3).yes());
}

TEST_CASE("node budget") {
  SolveConfig cfg;
  cfg.k = 20;
  cfg.node_budget = 1;
  CHECK_THROWS_AS(solve(random_erdos_renyi(16, 0.3, 2), cfg), BudgetExceeded);
}

TEST_CASE("answers agree with the oracle and do not depend on tree roots") {
  int yes = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int n = 5 + static_cast<int>(seed % 6);
    const MultiGraph g = random_erdos_renyi(n, 0.25 + 0.05 * static_cast<double>(seed % 5), seed);
    const int opt = brute_mmfvs(g).optimum;
    for (int k : {opt, opt + 1}) {
      const SolveResult a = run(g, k), b = run(g, k, true);
      CHECK(a.yes() == (k <= opt));
      CHECK(a.yes() == b.yes());
      CHECK(a.stats.mu_violations == 0);
      CHECK(a.stats.good_violations == 0);
      CHECK(b.stats.mu_violations == 0);
      if (a.yes()) {
        CHECK(check_witness(g, *a.witness).ok);
        ++yes;
      }
    }
  }
  CHECK(yes >= 150);
}

TEST_CASE("maximize finds the optimum") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const MultiGraph g = random_erdos_renyi(8, 0.45, seed);
    SolveConfig cfg;
    cfg.k = 0;
    cfg.maximize = true;
    const SolveResult r = solve(g, cfg);
    REQUIRE(r.yes());
    CHECK(static_cast<int>(r.witness->solution.size()) == brute_mmfvs(g).optimum);
  }
}

TEST_CASE("parallel workers give the same answers") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const MultiGraph g = random_erdos_renyi(9, 0.4, seed);
    const int opt = brute_mmfvs(g).optimum;
    SolveConfig cfg;
    cfg.k = opt;
    cfg.parallel_width = 3;
    const SolveResult r = solve(g, cfg);
    REQUIRE(r.yes());
    CHECK(check_witness(g, *r.witness).ok);
    cfg.k = opt + 1;
    CHECK_FALSE(solve(g, cfg).yes());
  }
}

TEST_CASE("branching on an isolated U-vertex with three forest edges") {
  const MultiGraph g = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto i = AnnotatedInstance::make(g, {}, {1, 2, 3}, 1);
  const int mu = measure(i).mu;
  const BranchChildren c = branch_step(i);
  CHECK(c.v == 0);
  REQUIRE(c.into_s.has_value());
  REQUIRE(c.into_forest.has_value());
  CHECK(measure(*c.into_s).mu <= mu - 1);
  CHECK(good_vertices(*c.into_s).count(0) == 1);
  CHECK(measure(*c.into_forest).mu <= mu - 2);
}

TEST_CASE("branching on a vertex with one U-neighbour") {
  const MultiGraph g = from_edges(5, {{0, 1}, {0, 2}, {0, 4}, {4, 3}});
  const auto i = AnnotatedInstance::make(g, {}, {1, 2, 3}, 1);
  const int mu = measure(i).mu;
  const BranchChildren c = branch_step(i);
  CHECK(c.v == 0);
  REQUIRE(c.into_s.has_value());
  REQUIRE(c.into_forest.has_value());
  CHECK(measure(*c.into_s).mu <= mu - 1);
  CHECK(measure(*c.into_forest).mu <= mu - 1);
}

TEST_CASE("branching on a U-star centre creates interesting paths") {
  const MultiGraph g = from_edges(7, {{0, 4}, {0, 5}, {0, 6}, {4, 1}, {5, 2}, {6, 3}});
  const auto i = AnnotatedInstance::make(g, {}, {1, 2, 3}, 1);
  const MeasureBreakdown before = measure(i);
  const BranchChildren c = branch_step(i);
  CHECK(c.v == 0);
  REQUIRE(c.into_forest.has_value());
  CHECK(measure(*c.into_forest).p >= before.p + 2);
  CHECK(measure(*c.into_forest).mu <= before.mu - 1);
}

TEST_CASE("branch_step refuses path-restricted instances") {
  const MultiGraph g = from_edges(3, {{0, 1}, {0, 2}});
  CHECK_THROWS_AS(branch_step(AnnotatedInstance::make(g, {}, {1, 2}, 0)), PreconditionError);
}
