#include "mmfvs/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "mmfvs/errors.hpp"

namespace mmfvs {

namespace {

constexpr long long kDefaultBudget = 50'000'000;

bool extraction_guaranteed(const MeasureBreakdown& m) { return m.mu <= 1 && (m.cc_f >= 1 || m.mu <= 0); }

std::string set_str(const VertexSet& s) {
  std::string out = "{";
  for (VertexId v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v + 1);
  return out + "}";
}

struct Cancelled {};

class Searcher {
 public:
  Searcher(const SolveConfig& cfg, long long budget, std::atomic<long long>& nodes,
           std::function<bool()> cancelled)
      : cfg_(cfg), budget_(budget), nodes_(nodes), cancelled_(std::move(cancelled)) {}

  SolveStats stats;
  std::optional<Witness> result;

  bool run(AnnotatedInstance inst) {
    try {
      return search(std::move(inst), 0);
    } catch (const Cancelled&) {
      return false;
    }
  }

 private:
  void tick() {
    ++stats.nodes;
    ++stats.search_nodes;
    if (budget_ > 0 && ++nodes_ > budget_)
      throw BudgetExceeded("node budget of " + std::to_string(budget_) + " exhausted");
    if (cancelled_ && cancelled_()) throw Cancelled{};
  }

  void trace(int depth, const std::string& msg) {
    if (cfg_.trace && cfg_.trace_sink) cfg_.trace_sink(std::string(2 * depth, ' ') + msg);
  }

  bool search(AnnotatedInstance inst, int depth) {
    tick();
    stats.max_depth = std::max(stats.max_depth, depth);
    stats.rules_applied += exhaust_rules(inst);
    if (!forest_is_acyclic(inst) || !feasible(inst)) {
      trace(depth, "discard");
      return false;
    }
    const MeasureBreakdown mb = measure(inst);
    if (extraction_guaranteed(mb)) {
      if (auto w = try_extract(inst)) {
        ++stats.extractions;
        trace(depth, "extract mu=" + std::to_string(mb.mu) + " size=" + std::to_string(w->solution.size()));
        result = std::move(w);
        return true;
      }
      ++stats.extraction_fallbacks;
    }
    if (is_path_restricted(inst)) {
      PathSolveConfig pc;
      pc.node_budget = budget_;
      pc.bound_constant = cfg_.path_bound_constant;
      pc.shared_nodes = budget_ > 0 ? &nodes_ : nullptr;
      pc.cancelled = cancelled_;
      AnnotatedResult r = solve_path_restricted(inst, pc);
      ++stats.path_calls;
      stats.nodes += r.stats.nodes;
      stats.path_nodes += r.stats.nodes;
      stats.rules_applied += r.stats.rules_applied;
      stats.lift_failures += r.stats.lift_failures;
      stats.path_bound_violations += r.stats.bound_violations;
      trace(depth, "path-restricted k=" + std::to_string(inst.k()) + " nodes=" +
                       std::to_string(r.stats.nodes) + (r.witness ? " yes" : " no"));
      if (cancelled_ && cancelled_()) throw Cancelled{};
      if (!r.witness) return false;
      result = std::move(r.witness);
      return true;
    }
    ++stats.mu_histogram[mb.mu];
    BranchChildren ch = branch_step(inst, cfg_.reverse_roots);
    trace(depth, "branch on " + std::to_string(ch.v + 1) + " mu=" + std::to_string(mb.mu));
    for (auto* child : {&ch.into_forest, &ch.into_s}) {
      if (!*child) continue;
      if (forest_is_acyclic(**child)) {
        const MeasureBreakdown cm = measure(**child);
        if (cm.mu > mb.mu - 1) ++stats.mu_violations;
        if (cm.g < mb.g) ++stats.good_violations;
      }
      if (search(std::move(**child), depth + 1)) return true;
    }
    return false;
  }

  const SolveConfig& cfg_;
  long long budget_;
  std::atomic<long long>& nodes_;
  std::function<bool()> cancelled_;
};

void merge(SolveStats& into, const SolveStats& s) {
  into.nodes += s.nodes;
  into.search_nodes += s.search_nodes;
  into.path_nodes += s.path_nodes;
  into.rules_applied += s.rules_applied;
  into.path_calls += s.path_calls;
  into.extractions += s.extractions;
  into.extraction_fallbacks += s.extraction_fallbacks;
  into.lift_failures += s.lift_failures;
  into.mu_violations += s.mu_violations;
  into.good_violations += s.good_violations;
  into.path_bound_violations += s.path_bound_violations;
  into.max_depth = std::max(into.max_depth, s.max_depth);
  for (auto [mu, c] : s.mu_histogram) into.mu_histogram[mu] += c;
}

// Subsets of `base` ordered by size, then lexicographically.
std::vector<VertexSet> ordered_subsets(const VertexSet& base) {
  const std::vector<VertexId> items(base.begin(), base.end());
  const int n = static_cast<int>(items.size());
  std::vector<VertexSet> out;
  for (int r = 0; r <= n; ++r) {
    std::vector<int> pick(r);
    for (int i = 0; i < r; ++i) pick[i] = i;
    while (true) {
      VertexSet s;
      for (int p : pick) s.insert(items[p]);
      out.push_back(std::move(s));
      int i = r - 1;
      while (i >= 0 && pick[i] == n - r + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace

long long default_node_budget() {
  if (const char* env = std::getenv("MMFVS_BUDGET")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

VertexSet initial_minimal_fvs(const MultiGraph& g) {
  const auto vs = g.vertices();
  return minimalize(g, VertexSet(vs.begin(), vs.end()));
}

BranchChildren branch_step(const AnnotatedInstance& inst, bool reverse_roots) {
  const MultiGraph& g = inst.graph();
  const auto vs = g.vertices();
  std::vector<int> depth(g.id_bound(), -1);
  // Roots in preference order; BFS fills depth per G[U] tree.
  std::vector<VertexId> order(vs.begin(), vs.end());
  if (reverse_roots) std::reverse(order.begin(), order.end());
  for (VertexId r : order) {
    if (inst.role(r) != Role::U || depth[r] >= 0) continue;
    depth[r] = 0;
    std::deque<VertexId> q{r};
    while (!q.empty()) {
      const VertexId x = q.front();
      q.pop_front();
      for (auto [y, m] : g.neighbors(x))
        if (inst.role(y) == Role::U && depth[y] < 0) {
          depth[y] = depth[x] + 1;
          q.push_back(y);
        }
    }
  }
  bool found = false;
  VertexId best = 0;
  for (VertexId v : order) {
    if (inst.role(v) != Role::U || inst.deg_fu(v) < 3) continue;
    if (!found || depth[v] > depth[best]) best = v, found = true;
  }
  if (!found) throw PreconditionError("branch_step: instance has no interesting vertex");

  BranchChildren out;
  out.v = best;
  AnnotatedInstance in_s = inst;
  in_s.set_role(best, Role::S);
  exhaust_rules(in_s);
  out.into_s = std::move(in_s);
  VertexMask fm = inst.mask(Role::F);
  fm[best] = 1;
  if (is_acyclic(g, fm)) {
    AnnotatedInstance in_f = inst;
    in_f.set_role(best, Role::F);
    exhaust_rules(in_f);
    out.into_forest = std::move(in_f);
  }
  return out;
}

namespace {

SolveResult decide(const MultiGraph& g, const SolveConfig& cfg) {
  const long long budget = cfg.node_budget > 0 ? cfg.node_budget : default_node_budget();
  auto emit = [&](const std::string& s) {
    if (cfg.trace && cfg.trace_sink) cfg.trace_sink(s);
  };

  // Self-looped vertices lie in every minimal FVS; solve the rest.
  VertexSet loops;
  for (VertexId v : g.vertices())
    if (g.self_loops(v) > 0) loops.insert(v);
  MultiGraph rest = g;
  for (VertexId v : loops) rest.remove_vertex(v);
  const int k = std::max(0, cfg.k - static_cast<int>(loops.size()));

  auto finish = [&](const VertexSet& sol) {
    VertexSet full = sol;
    full.insert(loops.begin(), loops.end());
    return make_witness(g, full);
  };

  SolveResult res;
  const VertexSet s0 = initial_minimal_fvs(rest);
  emit("initial minimal FVS " + set_str(s0) + " size " + std::to_string(s0.size()));
  if (static_cast<int>(s0.size()) >= k) {
    res.witness = finish(s0);
    return res;
  }

  const std::vector<VertexSet> guesses = ordered_subsets(s0);
  std::atomic<long long> nodes{0};
  std::atomic<std::size_t> winner{std::numeric_limits<std::size_t>::max()};
  std::vector<std::optional<Witness>> found(guesses.size());
  std::vector<SolveStats> per_guess(guesses.size());
  std::vector<char> explored(guesses.size(), 0);
  std::mutex err_mu;
  std::exception_ptr error;

  auto run_guess = [&](std::size_t idx, bool with_trace) {
    const VertexSet& x = guesses[idx];
    VertexSet f;
    std::set_difference(s0.begin(), s0.end(), x.begin(), x.end(), std::inserter(f, f.end()));
    if (!is_acyclic(rest, rest.mask_of(f))) return;
    explored[idx] = 1;
    SolveConfig local = cfg;
    local.trace = with_trace;
    std::function<bool()> cancelled = [&winner, idx] { return winner.load() < idx; };
    Searcher s(local, budget, nodes, cancelled);
    if (with_trace) local.trace_sink("guess S=" + set_str(x) + " F=" + set_str(f));
    AnnotatedInstance inst = AnnotatedInstance::make(rest, x, f, k);
    {
      AnnotatedInstance probe = inst;
      exhaust_rules(probe);
      s.stats.mu_initial = measure(probe).mu;
    }
    if (s.run(std::move(inst))) {
      found[idx] = std::move(s.result);
      std::size_t cur = winner.load();
      while (idx < cur && !winner.compare_exchange_weak(cur, idx)) {
      }
    }
    per_guess[idx] = std::move(s.stats);
  };

  const int width = std::max(1, cfg.parallel_width);
  if (width == 1) {
    for (std::size_t idx = 0; idx < guesses.size(); ++idx) {
      run_guess(idx, cfg.trace);
      if (found[idx]) break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      try {
        while (true) {
          const std::size_t idx = next++;
          if (idx >= guesses.size() || winner.load() < idx) return;
          run_guess(idx, false);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!error) error = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < width; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    const std::size_t w = winner.load();
    if (cfg.trace && w < guesses.size()) {
      found[w].reset();
      run_guess(w, true);
    }
  }

  for (std::size_t idx = 0; idx < guesses.size(); ++idx) {
    if (explored[idx]) ++res.stats.subsets_explored;
    merge(res.stats, per_guess[idx]);
    res.stats.mu_initial = std::max(res.stats.mu_initial, per_guess[idx].mu_initial);
  }
  const std::size_t w = winner.load();
  if (w < guesses.size()) res.witness = finish(found[w]->solution);
  return res;
}

}  // namespace

SolveResult solve(const MultiGraph& g, const SolveConfig& cfg) {
  if (cfg.k < 0) throw PreconditionError("k must be non-negative");
  if (!cfg.maximize) return decide(g, cfg);
  SolveConfig step = cfg;
  SolveResult best = decide(g, step);
  SolveStats total = best.stats;
  while (best.yes()) {
    step.k = static_cast<int>(best.witness->solution.size()) + 1;
    SolveResult next = decide(g, step);
    merge(total, next.stats);
    total.subsets_explored += next.stats.subsets_explored;
    total.mu_initial = std::max(total.mu_initial, next.stats.mu_initial);
    if (!next.yes()) break;
    best = std::move(next);
  }
  best.stats = total;
  return best;
}

}  // namespace mmfvs
