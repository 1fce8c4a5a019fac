#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mmfvs/graph.hpp"
#include "mmfvs/tree_decomposition.hpp"

namespace mmfvs {

// One DP tuple over a bag, by bag position (bag sorted ascending).
//
// Forest position: `color` is the guessed final component (C), `merge` the
// component of the processed part restricted to the bag, ignoring edges
// between two bag vertices (0 = alone).
// Solution position: `color` is the private-cycle target, one of kPending,
// kDone, or a forest colour; `count` is the number of edge units already
// seen into the target's component (0 or 1).
struct DPTuple {
  static constexpr int kPending = -1;
  static constexpr int kDone = -2;

  std::vector<char> in_solution;
  std::vector<int> color;
  std::vector<int> merge;
  std::vector<int> count;
  int size = 0;

  std::size_t bag_size() const { return in_solution.size(); }
  // Canonical byte key: colours renamed by first occurrence, lone merge classes 0.
  std::string key() const;
  static DPTuple from_key(const std::string& key, int size);
};

struct TupleTable {
  struct Entry {
    std::string key;
    int size = 0;
    int child_a = -1;
    int child_b = -1;
    bool took = false;  // Introduce: the vertex joined the solution
  };
  std::vector<Entry> entries;

  // Keeps the larger size per key; ties keep the earlier entry.
  void offer(const DPTuple& t, int child_a, int child_b = -1, bool took = false);
  std::size_t size() const { return entries.size(); }

 private:
  std::unordered_map<std::string, int> lookup_;
};

// Transitions. `g` supplies adjacency between the bag vertices.
TupleTable dp_leaf();
TupleTable dp_introduce(const MultiGraph& g, const NiceNode& node, const NiceNode& child, const TupleTable& in);
TupleTable dp_forget(const MultiGraph& g, const NiceNode& node, const NiceNode& child, const TupleTable& in);
TupleTable dp_join(const MultiGraph& g, const NiceNode& node, const TupleTable& left, const TupleTable& right);

struct TwStats {
  int width = 0;
  std::size_t nodes = 0;
  std::size_t max_tuples = 0;
  std::size_t total_tuples = 0;
  double tuple_bound = 0;    // (4(w+1))^(2(w+1))
  bool within_bound = true;
};

struct TwResult {
  int optimum = 0;
  bool yes = false;
  std::optional<Witness> witness;
  TwStats stats;
};

// Maximum minimal FVS over a nice decomposition of g, decided against k.
// Throws InputError when the decomposition does not match the graph.
TwResult solve_tw(const MultiGraph& g, const NiceTreeDecomposition& ntd, int k);
// Heuristic decomposition, nicified.
TwResult solve_tw(const MultiGraph& g, int k);

}  // namespace mmfvs
