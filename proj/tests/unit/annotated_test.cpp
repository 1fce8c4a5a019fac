#include <algorithm>

#include "doctest.h"
#include "mmfvs/annotated.hpp"
#include "mmfvs/errors.hpp"
#include "mmfvs/generators.hpp"
#include "mmfvs/oracle.hpp"
#include "shapes.hpp"

using namespace mmfvs;
using namespace mmfvs::testing;

namespace {

bool brute_yes(const AnnotatedInstance& i) {
  return brute_annotated(i.graph(), i.s(), i.f()).decides(i.k());
}

// Every minimal FVS S* with S ⊆ S* ⊆ S ∪ U.
std::vector<VertexSet> minimal_solutions(const AnnotatedInstance& i) {
  const VertexSet u = i.u();
  const std::vector<VertexId> free(u.begin(), u.end());
  std::vector<VertexSet> out;
  for (std::uint32_t bits = 0; bits < (1u << free.size()); ++bits) {
    VertexSet s = i.s();
    for (std::size_t b = 0; b < free.size(); ++b)
      if ((bits >> b) & 1) s.insert(free[b]);
    if (is_minimal_fvs(i.graph(), s)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("make rejects invalid annotations") {
  const MultiGraph k4 = complete(4);
  CHECK_THROWS_AS(AnnotatedInstance::make(k4, {0}, {0}, 1), PreconditionError);
  CHECK_THROWS_AS(AnnotatedInstance::make(k4, {0}, {}, 1), PreconditionError);
  CHECK_THROWS_AS(AnnotatedInstance::make(k4, {9}, {}, 1), PreconditionError);
  CHECK_THROWS_AS(AnnotatedInstance::make(k4, {0, 1}, {}, -1), PreconditionError);
  CHECK_NOTHROW(AnnotatedInstance::make(k4, {0, 1}, {}, 2));
}

TEST_CASE("good vertices") {
  // s = 0, F = {1, 2}, U = {3, 4}
  MultiGraph g = from_edges(5, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(good_vertices(AnnotatedInstance::make(g, {0}, {1, 2}, 1)) == VertexSet{0});
  g.add_edge(0, 4);
  CHECK(good_vertices(AnnotatedInstance::make(g, {0}, {1, 2}, 1)).empty());

  MultiGraph doubled(2);
  doubled.add_edge(0, 1, 2);
  CHECK(good_vertices(AnnotatedInstance::make(doubled, {0}, {1}, 1)) == VertexSet{0});
}

TEST_CASE("interesting paths") {
  const MultiGraph single = from_edges(3, {{0, 1}, {0, 2}});
  const auto a = AnnotatedInstance::make(single, {}, {1, 2}, 0);
  CHECK(interesting_paths(a) == std::vector<std::vector<VertexId>>{{0}});
  CHECK(is_path_restricted(a));

  const MultiGraph three = from_edges(5, {{0, 1}, {1, 2}, {0, 3}, {2, 4}});
  const auto b = AnnotatedInstance::make(three, {}, {3, 4}, 0);
  REQUIRE(interesting_paths(b).size() == 1);
  CHECK(interesting_paths(b)[0].size() == 3);

  const MultiGraph claw = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto c = AnnotatedInstance::make(claw, {}, {1, 2, 3}, 0);
  CHECK(interesting_paths(c).empty());
  CHECK_FALSE(is_path_restricted(c));
}

TEST_CASE("measure") {
  // F = {1, 2}, s = 0 good, one interesting path {3}.
  const MultiGraph g = from_edges(4, {{0, 1}, {0, 2}, {3, 1}, {3, 2}});
  const auto i = AnnotatedInstance::make(g, {0}, {1, 2}, 3);
  const MeasureBreakdown m = measure(i);
  CHECK(m.k == 3);
  CHECK(m.cc_f == 2);
  CHECK(m.g == 1);
  CHECK(m.p == 1);
  CHECK(m.mu == 3);
  CHECK(m.consistent());

  const MeasureBreakdown empty = measure(AnnotatedInstance::make(MultiGraph{}, {}, {}, 0));
  CHECK(empty.mu == 0);
  CHECK(empty.cc_f == 0);
}

TEST_CASE("rule 1 contracts adjacent forest vertices") {
  const MultiGraph g = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto i = AnnotatedInstance::make(g, {3}, {0, 1}, 1);
  REQUIRE(rule1_applies(i, 0, 1));
  const auto j = rule1(i, 0, 1);
  CHECK(j.graph().num_vertices() == 3);
  CHECK(forest_components(j) == forest_components(i));
  CHECK(j.f().size() == 1);
  CHECK(brute_yes(i) == brute_yes(j));
  CHECK_THROWS_AS(rule1(i, 1, 2), PreconditionError);
}

TEST_CASE("rule 2 deletes a vertex seeing only S") {
  // Two S-vertices each on a loop; U-vertex 2 adjacent to both.
  MultiGraph g = from_edges(3, {{0, 2}, {1, 2}});
  g.add_edge(0, 0);
  g.add_edge(1, 1);
  const auto i = AnnotatedInstance::make(g, {0, 1}, {}, 2);
  REQUIRE(rule2_applies(i, 2));
  const auto j = rule2(i, 2);
  CHECK_FALSE(j.graph().has_vertex(2));
  CHECK(j.k() == 2);
  CHECK(brute_yes(i) == brute_yes(j));
}

TEST_CASE("rule 3 contracts a U-vertex into its only F-neighbour") {
  // Triangle 0-1-2 with s = 0, F = {1}, U = {2, 3}; 3 hangs off 1.
  const MultiGraph g = from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 0}});
  const auto i = AnnotatedInstance::make(g, {0}, {1}, 1);
  REQUIRE(rule3_applies(i, 3));
  const auto j = rule3(i, 3);
  CHECK_FALSE(j.graph().has_vertex(3));
  CHECK_FALSE(j.graph().has_vertex(1));
  CHECK(j.f().size() == 1);
  const VertexId w = *j.f().begin();
  CHECK(j.graph().multiplicity(w, 0) == 2);
  CHECK(brute_yes(i) == brute_yes(j));
  CHECK(measure(j).mu <= measure(i).mu);
}

TEST_CASE("rule 3 keeps the private cycle of a doubled S edge") {
  // u = 2 has a doubled edge to s = 0 and one edge to F = {1}.
  MultiGraph g(3);
  g.add_edge(0, 2, 2);
  g.add_edge(2, 1);
  g.add_edge(0, 1);
  const auto i = AnnotatedInstance::make(g, {0}, {1}, 1);
  REQUIRE(rule3_applies(i, 2));
  CHECK(brute_yes(i));
  AnnotatedInstance j = rule3(i, 2);
  CHECK(brute_yes(j));
  exhaust_rules(j);
  const auto r = brute_annotated(j.graph(), j.s(), j.f());
  REQUIRE(r.witness.has_value());
  const LiftResult lifted = lift(j, r.witness->solution);
  REQUIRE(lifted.witness.has_value());
  CHECK(lifted.witness->solution == VertexSet{0});
}

TEST_CASE("exhaust_rules leaves every U-vertex with two F∪U edges") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomAnnotatedProfile prof;
    prof.n = 9;
    prof.parallel = 0.1;
    AnnotatedInstance i = random_annotated(prof, seed);
    const bool before = brute_yes(i);
    exhaust_rules(i);
    if (!forest_is_acyclic(i)) {
      CHECK_FALSE(before);
      continue;
    }
    for (VertexId u : i.u()) CHECK(i.deg_fu(u) >= 2);
    for (VertexId f : i.f()) CHECK(i.deg(f, Role::F) == 0);
    const auto r = brute_annotated(i.graph(), i.s(), i.f());
    CHECK(before == r.decides(i.k()));
    if (r.decides(i.k())) {
      const LiftResult lifted = lift(i, r.witness->solution);
      REQUIRE(lifted.witness.has_value());
      CHECK(static_cast<int>(lifted.witness->solution.size()) >= i.k() + i.undo().forced);
    }
  }
}

TEST_CASE("path rule (i) moves a cut vertex into F") {
  const MultiGraph g = from_edges(3, {{0, 2}, {2, 1}});
  const auto i = AnnotatedInstance::make(g, {}, {0, 1}, 0);
  REQUIRE(path_rule_i_applies(i, 2));
  const auto j = path_rule_i(i, 2);
  CHECK(j.role(2) == Role::F);
  CHECK(brute_yes(i) == brute_yes(j));
}

TEST_CASE("path rule (ii) deletes an S-vertex with two edges into one component") {
  const MultiGraph g = from_edges(4, {{0, 2}, {2, 1}, {3, 0}, {3, 1}});
  const auto i = AnnotatedInstance::make(g, {3}, {0, 1}, 1);
  REQUIRE(path_rule_ii_applies(i, 3));
  const auto j = path_rule_ii(i, 3);
  CHECK_FALSE(j.graph().has_vertex(3));
  CHECK(j.k() == 0);
  CHECK(j.undo().forced == 1);
  const auto r = brute_annotated(j.graph(), j.s(), j.f());
  REQUIRE(r.decides(j.k()));
  const LiftResult lifted = lift(j, r.witness->solution);
  REQUIRE(lifted.witness.has_value());
  CHECK(lifted.witness->solution.count(3) == 1);
  CHECK(check_witness(g, *lifted.witness).ok);
  CHECK(lifted.witness->solution == VertexSet{3});
}

TEST_CASE("base case on parallel U-paths") {
  const MultiGraph two = from_edges(4, {{0, 2}, {2, 1}, {0, 3}, {3, 1}});
  const auto a = base_case_solve(AnnotatedInstance::make(two, {}, {0, 1}, 0));
  REQUIRE(a.has_value());
  CHECK(a->size() == 1);

  const MultiGraph joined = from_edges(3, {{0, 1}, {0, 2}, {2, 1}});
  const auto b = base_case_solve(AnnotatedInstance::make(joined, {}, {0, 1}, 0));
  REQUIRE(b.has_value());
  CHECK(*b == VertexSet{2});
}

TEST_CASE("base case returns a verifying witness at k = 0") {
  int solved = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RandomPathProfile prof;
    prof.k = 0;
    AnnotatedInstance i = random_path_restricted(prof, seed);
    if (!feasible(i)) continue;
    const auto r = solve_path_restricted(i);
    CHECK(r.yes() == brute_yes(i));
    if (r.yes()) {
      CHECK(check_witness(i.original(), *r.witness).ok);
      ++solved;
    }
  }
  CHECK(solved > 0);
}

TEST_CASE("path-restricted solver on colouring instances") {
  const ColoringInstance k3 = coloring_to_annotated(complete(3));
  CHECK(k3.instance.k() == 12);
  const auto yes = solve_path_restricted(k3.instance);
  REQUIRE(yes.yes());
  CHECK(yes.witness->solution.size() >= 12);
  CHECK(check_witness(k3.instance.original(), *yes.witness).ok);

  const ColoringInstance k4 = coloring_to_annotated(complete(4));
  CHECK(k4.instance.k() == 22);
  CHECK_FALSE(solve_path_restricted(k4.instance).yes());

  const ColoringInstance k1 = coloring_to_annotated(MultiGraph(1));
  CHECK(k1.instance.k() == 1);
  CHECK(solve_path_restricted(k1.instance).yes());
}

TEST_CASE("infeasible instances are rejected") {
  const MultiGraph g = from_edges(2, {{0, 1}});
  const auto i = AnnotatedInstance::make(g, {0}, {1}, 1);
  CHECK_FALSE(feasible(i));
  CHECK_FALSE(solve_path_restricted(i).yes());
  CHECK_THROWS_AS(solve_path_restricted(AnnotatedInstance::make(from_edges(4, {{0, 1}, {0, 2}, {0, 3}}), {}, {1, 2, 3}, 0)),
                  PreconditionError);
}

TEST_CASE("extraction at low measure") {
  const Witness w = extract_when_mu_le_1(AnnotatedInstance::make(MultiGraph{}, {}, {}, 0));
  CHECK(w.solution.empty());

  // One F-vertex with three loops of U-paths: μ = 2 + 1 - 0 - 3 = 0.
  MultiGraph g(4);
  for (VertexId u = 1; u <= 3; ++u) g.add_edge(0, u, 2);
  const auto i = AnnotatedInstance::make(g, {}, {0}, 2);
  CHECK(measure(i).mu == 0);
  const Witness x = extract_when_mu_le_1(i);
  CHECK(x.solution.size() >= 2);
  CHECK(check_witness(g, x).ok);

  const auto high = AnnotatedInstance::make(g, {}, {0}, 5);
  CHECK_THROWS_AS(extract_when_mu_le_1(high), PreconditionError);
}

TEST_CASE("low measure always yields a witness of size k") {
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    RandomAnnotatedProfile prof;
    prof.n = 8;
    AnnotatedInstance i = random_annotated(prof, seed);
    exhaust_rules(i);
    if (!forest_is_acyclic(i) || !feasible(i) || measure(i).mu > 1) continue;
    const Witness w = extract_when_mu_le_1(i);
    CHECK(check_witness(i.original(), w).ok);
    CHECK(static_cast<int>(w.solution.size()) >= i.k() + i.undo().forced);
    ++hits;
  }
  CHECK(hits > 20);
}

TEST_CASE("a minimal solution takes at most one vertex per U-path") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    RandomPathProfile prof;
    prof.f_count = 2 + static_cast<int>(seed % 3);
    prof.paths = 2 + static_cast<int>(seed % 3);
    prof.max_path_len = 3;
    AnnotatedInstance i = random_path_restricted(prof, seed);
    if (i.graph().num_vertices() > 10) continue;
    const auto paths = interesting_paths(i);
    for (const VertexSet& sol : minimal_solutions(i)) {
      for (const auto& p : paths) {
        const auto taken = std::count_if(p.begin(), p.end(), [&](VertexId v) { return sol.count(v) > 0; });
        CHECK(taken <= 1);
      }
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("solution forests connect exactly what F ∪ U connects") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    RandomPathProfile prof;
    prof.f_count = 2 + static_cast<int>(seed % 3);
    prof.paths = 2 + static_cast<int>(seed % 3);
    AnnotatedInstance i = random_path_restricted(prof, seed);
    if (i.graph().num_vertices() > 10) continue;
    const MultiGraph& g = i.graph();
    const MultiGraph fu = g.induced(i.mask(Role::F, Role::U));
    for (const VertexSet& sol : minimal_solutions(i)) {
      VertexMask keep = g.full_mask();
      for (VertexId v : sol) keep[v] = 0;
      const MultiGraph forest = g.induced(keep);
      // Component labels by flood fill.
      auto label = [](const MultiGraph& h) {
        std::vector<int> comp(h.id_bound(), -1);
        int next = 0;
        for (VertexId s : h.vertices()) {
          if (comp[s] >= 0) continue;
          std::vector<VertexId> stack{s};
          comp[s] = next;
          while (!stack.empty()) {
            const VertexId x = stack.back();
            stack.pop_back();
            for (auto [y, m] : h.neighbors(x))
              if (comp[y] < 0) {
                comp[y] = next;
                stack.push_back(y);
              }
          }
          ++next;
        }
        return comp;
      };
      const auto a = label(forest), b = label(fu);
      const std::vector<VertexId> left = forest.vertices();
      for (VertexId x : left)
        for (VertexId y : left) CHECK((a[x] == a[y]) == (b[x] == b[y]));
      ++checked;
    }
  }
  CHECK(checked > 100);
}
