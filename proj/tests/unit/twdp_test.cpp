#include <string>

#include "doctest.h"
#include "mmfvs/errors.hpp"
#include "mmfvs/generators.hpp"
#include "mmfvs/oracle.hpp"
#include "mmfvs/tree_decomposition.hpp"
#include "mmfvs/twdp.hpp"
#include "shapes.hpp"

using namespace mmfvs;
using namespace mmfvs::testing;

namespace {

TreeDecomposition single_bag(const MultiGraph& g) {
  TreeDecomposition td;
  td.bags.push_back(g.vertices());
  return td;
}

int count_kind(const NiceTreeDecomposition& ntd, NiceKind k) {
  int c = 0;
  for (const NiceNode& n : ntd.nodes) c += n.kind == k ? 1 : 0;
  return c;
}

}  // namespace

TEST_CASE("nice form of a single triangle bag") {
  const MultiGraph g = cycle(3);
  const NiceTreeDecomposition ntd = make_nice(single_bag(g), g);
  CHECK(ntd.nodes.size() == 7);
  CHECK(count_kind(ntd, NiceKind::Leaf) == 1);
  CHECK(count_kind(ntd, NiceKind::Introduce) == 3);
  CHECK(count_kind(ntd, NiceKind::Forget) == 3);
  CHECK(ntd.width() == 2);
  CHECK(ntd.nodes.back().bag.empty());
  CHECK_NOTHROW(validate(ntd, g));
}

TEST_CASE("nice form of a path decomposition of P4") {
  const MultiGraph g = path(4);
  TreeDecomposition td;
  td.bags = {{0, 1}, {1, 2}, {2, 3}};
  td.edges = {{0, 1}, {1, 2}};
  CHECK(td.width() == 1);
  CHECK_NOTHROW(validate(td, g));
  const NiceTreeDecomposition ntd = make_nice(td, g);
  CHECK(ntd.width() == 1);
  CHECK_NOTHROW(validate(ntd, g));
}

TEST_CASE("decomposition errors are named") {
  const MultiGraph g = path(3);
  TreeDecomposition td;
  td.bags = {{0, 1}, {2}};
  td.edges = {{0, 1}};
  try {
    validate(td, g);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("edge not covered") != std::string::npos);
  }
  td.bags = {{0, 1}, {1, 2}, {0}};
  td.edges = {{0, 1}, {1, 2}};
  CHECK_THROWS_WITH_AS(validate(td, g), doctest::Contains("disconnected"), InputError);
  td.bags = {{0, 1}, {1, 2}};
  td.edges = {};
  CHECK_THROWS_WITH_AS(validate(td, g), doctest::Contains("not a tree"), InputError);
}

TEST_CASE("heuristic widths") {
  CHECK(heuristic_decomposition(path(6)).width() == 1);
  CHECK(heuristic_decomposition(cycle(4)).width() == 2);
  CHECK(heuristic_decomposition(complete(5)).width() == 4);
  const MultiGraph g = random_erdos_renyi(10, 0.3, 3);
  CHECK_NOTHROW(validate(heuristic_decomposition(g), g));
}

TEST_CASE("introducing a vertex on the empty table") {
  const MultiGraph g(1);
  NiceNode leaf;
  NiceNode intro{NiceKind::Introduce, 0, {0}, 0, -1};
  const TupleTable t = dp_introduce(g, intro, leaf, dp_leaf());
  REQUIRE(t.size() == 2);
  int in_solution = 0;
  for (const auto& e : t.entries) {
    const DPTuple d = DPTuple::from_key(e.key, e.size);
    if (d.in_solution[0]) {
      ++in_solution;
      CHECK(d.color[0] == DPTuple::kPending);
      CHECK(d.count[0] == 0);
      CHECK(e.size == 1);
    }
  }
  CHECK(in_solution == 1);
}

TEST_CASE("forgetting a solution vertex needs two units into its target") {
  MultiGraph g(2);
  g.add_edge(0, 1);
  NiceNode child{NiceKind::Introduce, 1, {0, 1}, 0, -1};
  NiceNode forget{NiceKind::Forget, 0, {1}, 1, -1};
  DPTuple t;
  t.in_solution = {1, 0};
  t.color = {0, 0};
  t.merge = {0, 0};
  t.count = {1, 0};
  t.size = 1;
  TupleTable in;
  in.offer(t, -1);
  CHECK(dp_forget(g, forget, child, in).size() == 1);

  t.count = {0, 0};
  TupleTable short_by_one;
  short_by_one.offer(t, -1);
  CHECK(dp_forget(g, forget, child, short_by_one).size() == 0);
}

TEST_CASE("tuple keys round trip") {
  DPTuple t;
  t.in_solution = {0, 1, 0};
  t.color = {3, DPTuple::kPending, 1};
  t.merge = {0, 0, 0};
  t.count = {0, 0, 0};
  t.size = 4;
  const DPTuple back = DPTuple::from_key(t.key(), t.size);
  CHECK(back.key() == t.key());
  CHECK(back.in_solution == t.in_solution);
  // Colours are renamed by first occurrence.
  CHECK(back.color[0] == 0);
  CHECK(back.color[2] == 1);
}

TEST_CASE("solve_tw small cases") {
  const TwResult forest = solve_tw(path(5), 0);
  CHECK(forest.yes);
  CHECK(forest.optimum == 0);

  const MultiGraph k4 = complete(4);
  const NiceTreeDecomposition clique = make_nice(single_bag(k4), k4);
  const TwResult two = solve_tw(k4, clique, 2);
  CHECK(two.yes);
  CHECK(two.optimum == 2);
  REQUIRE(two.witness.has_value());
  CHECK(check_witness(k4, *two.witness).ok);
  CHECK_FALSE(solve_tw(k4, clique, 3).yes);

  MultiGraph loops(3);
  loops.add_edge(0, 0);
  loops.add_edge(1, 2, 2);
  CHECK(solve_tw(loops, 0).optimum == 2);
}

TEST_CASE("mismatched decomposition is an input error") {
  const MultiGraph g = path(3);
  TreeDecomposition td;
  td.bags = {{0, 1}};
  CHECK_THROWS_AS(solve_tw(g, make_nice(td, path(2)), 0), InputError);
}

TEST_CASE("optimum does not depend on the decomposition") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const MultiGraph g = random_erdos_renyi(7, 0.4, seed);
    const int a = solve_tw(g, 0).optimum;
    const int b = solve_tw(g, make_nice(single_bag(g), g), 0).optimum;
    CHECK(a == b);
    CHECK(a == brute_mmfvs(g).optimum);
  }
}

TEST_CASE("tables stay within the tuple bound") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const MultiGraph g = random_sparse(14, 4 + static_cast<int>(seed % 6), seed);
    const TwResult r = solve_tw(g, 0);
    CHECK(r.stats.within_bound);
    CHECK(static_cast<double>(r.stats.max_tuples) <= r.stats.tuple_bound);
    REQUIRE(r.witness.has_value());
    CHECK(check_witness(g, *r.witness).ok);
  }
}
