#include "mmfvs_cli/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mmfvs/annotated.hpp"
#include "mmfvs/cnf.hpp"
#include "mmfvs/errors.hpp"
#include "mmfvs/generators.hpp"
#include "mmfvs/graph_io.hpp"
#include "mmfvs/oracle.hpp"
#include "mmfvs/solver.hpp"
#include "mmfvs/tree_decomposition.hpp"
#include "mmfvs/twdp.hpp"
#include "mmfvs_cli/json_io.hpp"

namespace mmfvs::cli {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Options {
  int k = 0;
  bool k_given = false;
  long long budget = 0;
  bool trace = false;
  bool maximize = false;
  int jobs = 1;
  int max_free = OracleConfig{}.max_free_vertices;
  std::string input;
  std::string second;
  std::string td;
  std::string witness_out;
  std::string output;
  std::string roles_out;
  std::vector<int> terminals;
  std::uint64_t seed = 1;
  bool seed_given = false;
  // random profiles
  std::string profile = "erdos-renyi";
  int n = 8;
  double p = 0.4;
  int s_count = 2;
  int f_count = 2;
  int paths = 4;
  int max_len = 3;
  int extra = 2;
  double parallel = 0.0;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

// Result document shared by the solvers.
void put_witness(json& body, const std::optional<Witness>& w, const Options& o) {
  if (!w) return;
  const json wj = witness_to_json(*w);
  body["witness"] = wj["witness"];
  body["certificates"] = wj["certificates"];
  body["witness_size"] = w->solution.size();
  if (!o.witness_out.empty()) {
    write_text(o.witness_out, wj.dump(2) + "\n");
    body["witness_path"] = o.witness_out;
  }
}

json solve_stats_json(const SolveStats& s) {
  json hist = json::object();
  for (const auto& [mu, count] : s.mu_histogram) hist[std::to_string(mu)] = count;
  return {{"nodes", s.nodes},
          {"search_nodes", s.search_nodes},
          {"path_nodes", s.path_nodes},
          {"rules_applied", s.rules_applied},
          {"subsets_explored", s.subsets_explored},
          {"path_calls", s.path_calls},
          {"extractions", s.extractions},
          {"extraction_fallbacks", s.extraction_fallbacks},
          {"lift_failures", s.lift_failures},
          {"mu_violations", s.mu_violations},
          {"good_violations", s.good_violations},
          {"path_bound_violations", s.path_bound_violations},
          {"mu_initial", s.mu_initial},
          {"max_depth", s.max_depth},
          {"mu_histogram", std::move(hist)}};
}

int cmd_solve(const Options& o, json& body, std::ostream& err) {
  const MultiGraph g = read_graph_file(o.input);
  body["inputs"] = {{o.input, file_digest(o.input)}};
  SolveConfig cfg;
  cfg.k = o.k;
  cfg.node_budget = o.budget;
  cfg.parallel_width = o.jobs;
  cfg.maximize = o.maximize;
  cfg.trace = o.trace;
  json trace = json::array();
  if (o.trace) cfg.trace_sink = [&trace](const std::string& line) { trace.push_back(line); };
  const SolveResult r = solve(g, cfg);
  body["answer"] = r.yes() ? "yes" : "no";
  body["k"] = o.k;
  body["subsets_explored"] = r.stats.subsets_explored;
  put_witness(body, r.witness, o);
  body["stats"] = solve_stats_json(r.stats);
  if (o.trace) body["trace"] = std::move(trace);
  err << "solve: " << (r.yes() ? "yes" : "no") << " for k=" << o.k;
  if (r.yes()) err << ", witness size " << r.witness->solution.size();
  err << ", " << r.stats.nodes << " nodes";
  return r.yes() ? kYes : kNo;
}

int cmd_solve_tw(const Options& o, json& body, std::ostream& err) {
  const MultiGraph g = read_graph_file(o.input);
  body["inputs"] = {{o.input, file_digest(o.input)}};
  TwResult r;
  if (o.td.empty()) {
    r = solve_tw(g, o.k);
    body["decomposition"] = "heuristic";
  } else {
    const TreeDecomposition td = read_td_file(o.td);
    validate(td, g);
    r = solve_tw(g, make_nice(td, g), o.k);
    body["decomposition"] = o.td;
    body["inputs"][o.td] = file_digest(o.td);
  }
  body["answer"] = r.yes ? "yes" : "no";
  body["k"] = o.k;
  body["optimum"] = r.optimum;
  put_witness(body, r.witness, o);
  body["stats"] = {{"width", r.stats.width},
                   {"nodes", r.stats.nodes},
                   {"max_tuples", r.stats.max_tuples},
                   {"total_tuples", r.stats.total_tuples},
                   {"tuple_bound", r.stats.tuple_bound},
                   {"within_bound", r.stats.within_bound}};
  err << "solve-tw: optimum " << r.optimum << ", " << (r.yes ? "yes" : "no") << " for k=" << o.k << ", width "
      << r.stats.width;
  return r.yes ? kYes : kNo;
}

int cmd_oracle(const Options& o, json& body, std::ostream& err) {
  const MultiGraph g = read_graph_file(o.input);
  body["inputs"] = {{o.input, file_digest(o.input)}};
  const OracleResult r = brute_mmfvs(g, OracleConfig{o.max_free});
  const bool yes = r.decides(o.k);
  body["answer"] = yes ? "yes" : "no";
  body["k"] = o.k;
  body["optimum"] = r.optimum;
  put_witness(body, r.witness, o);
  err << "oracle: optimum " << r.optimum << ", " << (yes ? "yes" : "no") << " for k=" << o.k;
  return yes ? kYes : kNo;
}

int cmd_oracle_annotated(const Options& o, json& body, std::ostream& err) {
  const InstanceDoc doc = instance_from_json(read_json_file(o.input), fs::path(o.input).parent_path());
  body["inputs"] = {{o.input, file_digest(o.input)}};
  const int k = o.k_given ? o.k : doc.k;
  const OracleResult r = brute_annotated(doc.graph, doc.s, doc.f, OracleConfig{o.max_free});
  const bool yes = r.decides(k);
  body["answer"] = yes ? "yes" : "annotated-no";
  body["k"] = k;
  body["optimum"] = r.optimum;
  put_witness(body, r.witness, o);
  json stats = {{"nodes", 0}, {"rules_applied", 0}};
  try {
    const AnnotatedInstance inst = AnnotatedInstance::make(doc.graph, doc.s, doc.f, std::max(0, k));
    const MeasureBreakdown m = measure(inst);
    stats["mu_initial"] = m.mu;
    stats["path_restricted"] = is_path_restricted(inst);
  } catch (const PreconditionError&) {
  }
  body["stats"] = std::move(stats);
  err << "oracle-annotated: optimum " << r.optimum << ", " << (yes ? "yes" : "annotated-no") << " for k=" << k;
  return yes ? kYes : kNo;
}

int cmd_verify(const Options& o, json& body, std::ostream& err) {
  const MultiGraph g = read_graph_file(o.input);
  const Witness w = witness_from_json(read_json_file(o.second));
  body["inputs"] = {{o.input, file_digest(o.input)}, {o.second, file_digest(o.second)}};
  const WitnessCheck c = check_witness(g, w);
  body["valid"] = c.ok;
  body["witness_size"] = w.solution.size();
  if (!c.ok) {
    body["failure"] = c.failure;
    err << "verify: rejected: " << c.failure;
    return kUsage;
  }
  if (o.k_given && static_cast<int>(w.solution.size()) < o.k) {
    body["valid"] = false;
    body["failure"] = "witness smaller than k";
    err << "verify: rejected: witness smaller than k";
    return kUsage;
  }
  err << "verify: valid minimal feedback vertex set of size " << w.solution.size();
  return kYes;
}

// Contiguous thirds of the variables form the three parts, the layout that
// sat2p3 writes.
PartitionedCnf as_partitioned(const CnfFormula& f) {
  if (f.num_vars % 3 != 0) throw InputError("variable count is not divisible by 3");
  PartitionedCnf pc;
  pc.formula = f;
  const int n = f.num_vars / 3;
  for (int p = 0; p < 3; ++p)
    for (int x = 1; x <= n; ++x) pc.parts[p].push_back(p * n + x);
  pc.validate();
  return pc;
}

void emit_graph(const Options& o, const MultiGraph& g, json& body, const std::vector<std::string>& comments) {
  if (o.output.empty()) {
    body["graph"] = graph_to_json(g);
  } else {
    write_graph_file(o.output, g, comments);
    body["graph_path"] = o.output;
  }
}

void emit_doc(const Options& o, const json& doc, json& body, const char* field) {
  if (o.output.empty()) {
    body[field] = doc;
  } else {
    write_text(o.output, doc.dump(2) + "\n");
    body[std::string(field) + "_path"] = o.output;
  }
}

int gen_eth(const Options& o, json& body, std::ostream& err) {
  const PartitionedCnf pc = as_partitioned(read_dimacs_file(o.input));
  body["inputs"] = {{o.input, file_digest(o.input)}};
  const EthConstruction ec = gen_eth_instance(pc);
  const EthReport rep = verify_eth(ec);
  const EthParams& P = ec.params;
  json params = {{"n", P.n}, {"n_input", P.n_input}, {"m", P.m}, {"log_n", P.log_n}, {"L", P.L},
                 {"R", P.R}, {"A", P.A},           {"k", P.k}};
  json roles = json::object();
  for (const auto& [v, r] : eth_roles(ec)) roles[std::to_string(v + 1)] = r;
  json sidecar = {{"roles", std::move(roles)}, {"params", params}};
  if (!o.roles_out.empty()) {
    write_text(o.roles_out, sidecar.dump(2) + "\n");
    body["roles_path"] = o.roles_out;
  } else if (!o.output.empty()) {
    write_text(o.output + ".roles.json", sidecar.dump(2) + "\n");
    body["roles_path"] = o.output + ".roles.json";
  } else {
    body["roles"] = sidecar["roles"];
  }
  emit_graph(o, ec.graph, body, {"eth construction k=" + std::to_string(P.k)});
  body["params"] = params;
  body["verify"] = {{"ok", rep.ok()}, {"violations", rep.violations}, {"vc_size", rep.vc_size},
                    {"vc_bound", rep.vc_bound}};
  if (!o.witness_out.empty()) {
    const auto sat = brute_satisfiable(pc.formula);
    if (!sat) throw PreconditionError("formula is unsatisfiable; no constructive witness");
    const Witness w = constructive_witness(ec, *sat);
    write_text(o.witness_out, witness_to_json(w).dump(2) + "\n");
    body["witness_path"] = o.witness_out;
    body["witness_size"] = w.solution.size();
  }
  err << "gen eth: " << ec.graph.num_vertices() << " vertices, k=" << P.k
      << (rep.ok() ? ", structure verified" : ", STRUCTURE VIOLATIONS");
  return rep.ok() ? kYes : kUsage;
}

int gen_sat2p3(const Options& o, json& body, std::ostream& err) {
  const CnfFormula f = read_dimacs_file(o.input);
  body["inputs"] = {{o.input, file_digest(o.input)}};
  const PartitionedCnf pc = sat_to_3p3sat(f);
  std::ostringstream ss;
  ss << "c parts: 1.." << pc.part_size() << ", " << pc.part_size() + 1 << ".." << 2 * pc.part_size() << ", "
     << 2 * pc.part_size() + 1 << ".." << 3 * pc.part_size() << "\n";
  write_dimacs(ss, pc.formula);
  if (o.output.empty()) {
    body["cnf"] = ss.str();
  } else {
    write_text(o.output, ss.str());
    body["cnf_path"] = o.output;
  }
  body["num_vars"] = pc.formula.num_vars;
  body["clauses"] = pc.formula.clauses.size();
  body["part_size"] = pc.part_size();
  err << "gen sat2p3: " << pc.formula.num_vars << " variables, " << pc.formula.clauses.size() << " clauses";
  return kYes;
}

int gen_color(const Options& o, json& body, std::ostream& err) {
  const MultiGraph g = read_graph_file(o.input);
  body["inputs"] = {{o.input, file_digest(o.input)}};
  const ColoringInstance ci = coloring_to_annotated(g);
  const AnnotatedInstance& inst = ci.instance;
  json doc = instance_to_json(inst.graph(), inst.s(), inst.f(), inst.k());
  json roles = json::object();
  for (const auto& [v, r] : ci.roles) roles[std::to_string(v + 1)] = r;
  doc["roles"] = std::move(roles);
  emit_doc(o, doc, body, "instance");
  body["k"] = inst.k();
  body["vertices"] = inst.graph().num_vertices();
  err << "gen color2ammfvs: " << inst.graph().num_vertices() << " vertices, k=" << inst.k();
  return kYes;
}

int gen_kintree(const Options& o, json& body, std::ostream& err) {
  const MultiGraph g = read_graph_file(o.input);
  body["inputs"] = {{o.input, file_digest(o.input)}};
  std::vector<VertexId> terms;
  for (int t : o.terminals) {
    if (t < 1) throw InputError("terminal ids are 1-based");
    terms.push_back(static_cast<VertexId>(t - 1));
  }
  const ExtensionInstance ext = k_in_tree_to_extension(g, terms);
  const json doc = {{"graph", graph_to_json(ext.graph)}, {"S", vertex_list(ext.s)}};
  emit_doc(o, doc, body, "instance");
  err << "gen kintree: added " << ext.s.size() << " vertices";
  return kYes;
}

int gen_random(const Options& o, json& body, std::ostream& err) {
  body["profile"] = o.profile;
  body["seed"] = o.seed;
  if (o.profile == "erdos-renyi" || o.profile == "sparse") {
    const MultiGraph g =
        o.profile == "sparse" ? random_sparse(o.n, o.extra, o.seed) : random_erdos_renyi(o.n, o.p, o.seed);
    emit_graph(o, g, body, {o.profile + " seed=" + std::to_string(o.seed)});
    err << "gen random: " << o.profile << " with " << g.num_vertices() << " vertices, " << g.num_edges() << " edges";
    return kYes;
  }
  std::optional<AnnotatedInstance> inst;
  if (o.profile == "random-annotated") {
    RandomAnnotatedProfile prof;
    prof.n = o.n;
    prof.s_count = o.s_count;
    prof.f_count = o.f_count;
    prof.p = o.p;
    prof.parallel = o.parallel;
    prof.k = o.k_given ? o.k : -1;
    inst = random_annotated(prof, o.seed);
  } else if (o.profile == "random-path-restricted") {
    RandomPathProfile prof;
    prof.f_count = o.f_count;
    prof.paths = o.paths;
    prof.max_path_len = o.max_len;
    prof.s_count = o.s_count;
    prof.k = o.k_given ? o.k : -1;
    inst = random_path_restricted(prof, o.seed);
  } else {
    throw InputError("unknown profile " + o.profile);
  }
  emit_doc(o, instance_to_json(inst->graph(), inst->s(), inst->f(), inst->k()), body, "instance");
  err << "gen random: " << o.profile << " with " << inst->graph().num_vertices() << " vertices, k=" << inst->k();
  return kYes;
}

// ---- bench ----------------------------------------------------------------

int cmd_bench(const Options& o, json& body, std::ostream& out, std::ostream& err) {
  const json suite = read_json_file(o.input);
  body["inputs"] = {{o.input, file_digest(o.input)}};
  if (!suite.is_object() || !suite.contains("entries") || !suite.at("entries").is_array())
    throw InputError("bench suite needs an \"entries\" list");
  const std::uint64_t base_seed = o.seed_given ? o.seed : suite.value("seed", std::uint64_t{1});
  out << "instance,k,answer,nodes,ms\n";
  std::size_t rows = 0;
  for (const json& e : suite.at("entries")) {
    if (!e.is_object()) throw InputError("bench entry must be an object");
    const std::string profile = e.value("profile", std::string("erdos-renyi"));
    const std::string name = e.value("name", profile);
    const std::string solver = e.value("solver", std::string("solve"));
    int k_lo = 0, k_hi = 0;
    if (e.contains("k")) {
      const json& kr = e.at("k");
      if (kr.is_number_integer()) {
        k_lo = k_hi = kr.get<int>();
      } else if (kr.is_array() && kr.size() == 2) {
        k_lo = kr[0].get<int>();
        k_hi = kr[1].get<int>();
      } else {
        throw InputError("bench entry " + name + ": k is an integer or [lo, hi]");
      }
    }
    const int reps = e.value("repetitions", 1);
    for (int rep = 0; rep < reps; ++rep) {
      const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(rep);
      for (int k = k_lo; k <= k_hi; ++k) {
        const auto t0 = Clock::now();
        bool yes = false;
        long long nodes = 0;
        if (profile == "erdos-renyi" || profile == "sparse") {
          const MultiGraph g = profile == "sparse"
                                   ? random_sparse(e.value("n", 20), e.value("extra", 3), seed)
                                   : random_erdos_renyi(e.value("n", 10), e.value("p", 0.3), seed);
          if (solver == "solve") {
            SolveConfig cfg;
            cfg.k = k;
            cfg.parallel_width = o.jobs;
            const SolveResult r = solve(g, cfg);
            yes = r.yes();
            nodes = r.stats.nodes;
          } else if (solver == "solve-tw") {
            const TwResult r = solve_tw(g, k);
            yes = r.yes;
            nodes = static_cast<long long>(r.stats.total_tuples);
          } else if (solver == "oracle") {
            yes = brute_mmfvs(g).decides(k);
          } else {
            throw InputError("bench entry " + name + ": unknown solver " + solver);
          }
        } else if (profile == "random-path-restricted") {
          RandomPathProfile prof;
          prof.f_count = e.value("f", 3);
          prof.paths = e.value("paths", 4);
          prof.max_path_len = e.value("max_len", 3);
          prof.s_count = e.value("s", 2);
          prof.k = k;
          const AnnotatedResult r = solve_path_restricted(random_path_restricted(prof, seed));
          yes = r.yes();
          nodes = r.stats.nodes;
        } else {
          throw InputError("bench entry " + name + ": unknown profile " + profile);
        }
        out << name << "#" << rep << "," << k << "," << (yes ? "yes" : "no") << "," << nodes << "," << ms_since(t0)
            << "\n";
        ++rows;
      }
    }
  }
  body["rows"] = rows;
  err << "bench: " << rows << " rows";
  return kYes;
}

void add_random_options(CLI::App* sub, Options& o) {
  sub->add_option("--profile", o.profile, "erdos-renyi, sparse, random-annotated or random-path-restricted")
      ->check(CLI::IsMember({"erdos-renyi", "sparse", "random-annotated", "random-path-restricted"}));
  sub->add_option("--n", o.n, "Vertex count")->check(CLI::NonNegativeNumber);
  sub->add_option("--p", o.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  sub->add_option("--s", o.s_count, "Number of S vertices")->check(CLI::NonNegativeNumber);
  sub->add_option("--f", o.f_count, "Number of F vertices")->check(CLI::NonNegativeNumber);
  sub->add_option("--paths", o.paths, "Interesting paths")->check(CLI::NonNegativeNumber);
  sub->add_option("--max-len", o.max_len, "Longest interesting path")->check(CLI::PositiveNumber);
  sub->add_option("--extra", o.extra, "Edges beyond the spanning tree (sparse)")->check(CLI::NonNegativeNumber);
  sub->add_option("--parallel", o.parallel, "Chance of doubling an edge between classes")->check(CLI::Range(0.0, 1.0));
}

}  // namespace

RunReport run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunReport report;
  report.command = args;
  Options o;

  CLI::App app{"Exact solvers for maximum minimal feedback vertex sets", "mmfvs"};
  app.require_subcommand(1);
  app.fallthrough(false);

  auto k_option = [&o](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-k", o.k, "Target solution size")->check(CLI::NonNegativeNumber);
    if (required) opt->required();
    return opt;
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "Branch-and-reduce decision: minimal FVS of size >= k?");
  k_option(solve_cmd, true);
  solve_cmd->add_option("--budget", o.budget, "Node budget (default MMFVS_BUDGET or built-in)")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--trace", o.trace, "Include the search trace in the report");
  solve_cmd->add_flag("--maximize", o.maximize, "Search for a maximum minimal FVS");
  solve_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--witness", o.witness_out, "Write the witness JSON here");
  solve_cmd->add_option("GRAPH", o.input, "Graph file")->required();

  CLI::App* tw_cmd = app.add_subcommand("solve-tw", "Tree-decomposition dynamic program");
  k_option(tw_cmd, true);
  tw_cmd->add_option("--td", o.td, "Tree decomposition file (PACE format)");
  tw_cmd->add_option("--witness", o.witness_out, "Write the witness JSON here");
  tw_cmd->add_option("GRAPH", o.input, "Graph file")->required();

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Brute-force maximum minimal FVS");
  k_option(oracle_cmd, false);
  oracle_cmd->add_option("--max-free", o.max_free, "Enumeration cap")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--witness", o.witness_out, "Write the witness JSON here");
  oracle_cmd->add_option("GRAPH", o.input, "Graph file")->required();

  CLI::App* oa_cmd = app.add_subcommand("oracle-annotated", "Brute force on an annotated instance");
  CLI::Option* oa_k = k_option(oa_cmd, false);
  oa_cmd->add_option("--max-free", o.max_free, "Enumeration cap")->check(CLI::PositiveNumber);
  oa_cmd->add_option("--witness", o.witness_out, "Write the witness JSON here");
  oa_cmd->add_option("INSTANCE", o.input, "Instance JSON")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a witness and its certificates");
  CLI::Option* verify_k = k_option(verify_cmd, false);
  verify_cmd->add_option("GRAPH", o.input, "Graph file")->required();
  verify_cmd->add_option("WITNESS", o.second, "Witness JSON")->required();

  CLI::App* gen_cmd = app.add_subcommand("gen", "Reductions and instance generators");
  gen_cmd->require_subcommand(1);
  CLI::App* g_eth = gen_cmd->add_subcommand("eth", "Choice-gadget construction from a partitioned 3-CNF");
  g_eth->add_option("CNF", o.input, "DIMACS file; parts are contiguous thirds of the variables")->required();
  g_eth->add_option("--roles", o.roles_out, "Role map JSON (default: OUTPUT.roles.json)");
  g_eth->add_option("--witness", o.witness_out, "Write the constructive witness JSON here");
  g_eth->add_option("-o,--output", o.output, "Graph file");
  CLI::App* g_sat = gen_cmd->add_subcommand("sat2p3", "3-CNF to partitioned 3-CNF");
  g_sat->add_option("CNF", o.input, "DIMACS file")->required();
  g_sat->add_option("-o,--output", o.output, "DIMACS output");
  CLI::App* g_col = gen_cmd->add_subcommand("color2ammfvs", "3-colouring to annotated instance");
  g_col->add_option("GRAPH", o.input, "Graph file")->required();
  g_col->add_option("-o,--output", o.output, "Instance JSON");
  CLI::App* g_kit = gen_cmd->add_subcommand("kintree", "k-in-a-tree to extension instance");
  g_kit->add_option("GRAPH", o.input, "Graph file")->required();
  g_kit->add_option("--terminals", o.terminals, "Terminal ids in order")->required()->delimiter(',');
  g_kit->add_option("-o,--output", o.output, "Instance JSON");
  CLI::App* g_rand = gen_cmd->add_subcommand("random", "Seeded random instances");
  add_random_options(g_rand, o);
  CLI::Option* rand_k = g_rand->add_option("-k", o.k, "k for annotated profiles")->check(CLI::NonNegativeNumber);
  g_rand->add_option("--seed", o.seed, "Random seed");
  g_rand->add_option("-o,--output", o.output, "Output file");

  CLI::App* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite, CSV on stdout");
  bench_cmd->add_option("SUITE", o.input, "Suite JSON")->required();
  CLI::Option* bench_seed = bench_cmd->add_option("--seed", o.seed, "Override the suite seed");
  bench_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  const auto t0 = Clock::now();
  json& body = report.body;
  auto fail = [&](int code, const std::string& what) {
    body = {{"answer", code == kBudget ? "budget-exceeded" : "error"}, {"error", what}};
    err << "error: " << what;
    return code;
  };

  int code = kUsage;
  bool emit_json = true;
  try {
    if (!args.empty() && !args[0].empty() && args[0][0] != '-' && app.get_subcommand_no_throw(args[0]) == nullptr)
      throw InputError("unknown subcommand " + args[0]);
    try {
      app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      report.exit_code = kYes;
      return report;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      report.exit_code = kYes;
      return report;
    } catch (const CLI::ParseError& e) {
      throw InputError(e.what());
    }
    o.k_given = (oa_k->count() + verify_k->count() + rand_k->count()) > 0 ||
                oracle_cmd->get_option("-k")->count() > 0;
    o.seed_given = bench_seed->count() > 0;

    if (solve_cmd->parsed()) {
      code = cmd_solve(o, body, err);
    } else if (tw_cmd->parsed()) {
      code = cmd_solve_tw(o, body, err);
    } else if (oracle_cmd->parsed()) {
      code = cmd_oracle(o, body, err);
    } else if (oa_cmd->parsed()) {
      code = cmd_oracle_annotated(o, body, err);
    } else if (verify_cmd->parsed()) {
      code = cmd_verify(o, body, err);
    } else if (g_eth->parsed()) {
      code = gen_eth(o, body, err);
    } else if (g_sat->parsed()) {
      code = gen_sat2p3(o, body, err);
    } else if (g_col->parsed()) {
      code = gen_color(o, body, err);
    } else if (g_kit->parsed()) {
      code = gen_kintree(o, body, err);
    } else if (g_rand->parsed()) {
      code = gen_random(o, body, err);
    } else if (bench_cmd->parsed()) {
      emit_json = false;
      code = cmd_bench(o, body, out, err);
    }
  } catch (const BudgetExceeded& e) {
    code = fail(kBudget, e.what());
    emit_json = true;
  } catch (const InputError& e) {
    code = fail(kUsage, e.what());
    emit_json = true;
  } catch (const PreconditionError& e) {
    code = fail(kUsage, e.what());
    emit_json = true;
  }
  const double wall = ms_since(t0);
  err << " (" << wall << " ms)\n";
  report.exit_code = code;
  body["command"] = args;
  body["wall_ms"] = wall;
  body["exit_code"] = code;
  if (emit_json) out << body.dump(2) << "\n";
  return report;
}

}  // namespace mmfvs::cli
