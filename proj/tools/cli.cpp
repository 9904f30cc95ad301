#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "relate/cnf.hpp"
#include "relate/decide.hpp"
#include "relate/error.hpp"
#include "relate/generate.hpp"
#include "relate/graph.hpp"
#include "relate/json_io.hpp"
#include "relate/reductions.hpp"
#include "relate/sat_solve.hpp"

namespace relate::cli {

namespace fs = std::filesystem;

namespace {

struct RunConfig {
  std::uint64_t seed = 1;
  std::uint64_t cap_nodes = kDefaultNodeBudget;
  std::uint64_t cap_sets = kDefaultSubsetCap;
  std::uint64_t cap_mis = kDefaultMisCap;
  bool verify = false;
};

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Write-then-rename so a reader never sees a half-written artifact.
void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write '" + path.string() + "'", 0);
    out << content;
  }
  fs::rename(tmp, path);
}

CnfFormula load_cnf(const std::string& path) { return parse_dimacs(read_file(path)); }
Graph load_graph(const std::string& path) { return parse_graph_dimacs(read_file(path)); }

std::string model_line(const TruthAssignment& t) {
  std::ostringstream ss;
  ss << 'v';
  for (int v = 1; v <= t.num_vars(); ++v) ss << ' ' << (t.value(v) ? v : -v);
  ss << " 0";
  return ss.str();
}

std::string set_string(const VertexSet& s) {
  std::ostringstream ss;
  ss << s;
  return ss.str();
}

// solve ---------------------------------------------------------------------------------

int cmd_solve(const std::string& path, bool brute, const RunConfig& cfg, std::ostream& out) {
  const CnfFormula f = load_cnf(path);
  const SolveResult r = brute ? solve_brute(f) : solve(f, cfg.cap_nodes);
  if (!r.satisfiable) {
    out << "UNSAT\n";
    return kNegative;
  }
  out << "SAT\n" << model_line(*r.model) << '\n';
  return kPositive;
}

// reduce ---------------------------------------------------------------------------------

int cmd_reduce(const std::string& kind, const std::string& in, const std::string& out_path,
               const std::string& trace_path, const RunConfig& cfg, std::ostream& out) {
  const CnfFormula f = load_cnf(in);
  Reduced<CnfFormula> r;
  if (kind == "to23sat") {
    r = to_23sat(f);
  } else if (kind == "debadpair") {
    r = eliminate_bad_pairs(f);
  } else {
    throw ContractViolation("unknown reduction '" + kind + "'");
  }
  write_file(out_path, emit_dimacs(r.result));
  if (!trace_path.empty()) write_file(trace_path, trace_to_json(r.trace).dump(2) + "\n");
  out << kind << ": " << f.num_clauses() << " clauses -> " << r.result.num_clauses()
      << " clauses, " << r.trace.steps.size() << " trace steps\n";
  if (!cfg.verify) return kPositive;

  const SolveResult before = solve(f, cfg.cap_nodes);
  const SolveResult after = solve(r.result, cfg.cap_nodes);
  if (before.satisfiable != after.satisfiable) {
    throw VerificationFailure("satisfiability changed across " + kind);
  }
  if (replay(f, r.trace) != r.result) throw VerificationFailure("trace does not replay");
  if (kind == "to23sat") {
    if (auto check = is_23sat_instance(r.result); !check) {
      throw VerificationFailure("output is not 23SAT: " + check.violation);
    }
    if (before.satisfiable) {
      if (!evaluate(r.result, lift_assignment(r.trace, *before.model)) ||
          !evaluate(f, project_assignment(r.trace, *after.model))) {
        throw VerificationFailure("model translation failed");
      }
    }
  } else {
    if (!find_bad_pairs(r.result).empty()) throw VerificationFailure("bad pairs remain");
    if (before.satisfiable && !evaluate(f, backfill_assignment(f, r.trace, *after.model))) {
      throw VerificationFailure("backfilled model fails the input");
    }
  }
  out << "verified: " << (before.satisfiable ? "SAT" : "UNSAT") << " on both sides\n";
  return kPositive;
}

// build-gi ---------------------------------------------------------------------------------

int cmd_build_gi(const std::string& in, const std::string& graph_path, const std::string& map_path,
                 bool check_c6, std::ostream& out) {
  const CnfFormula f = load_cnf(in);
  const SatGraph gi = build_g_i(f);
  write_file(graph_path, emit_graph_dimacs(gi.graph));
  if (!map_path.empty()) write_file(map_path, map_to_json(gi.map).dump(2) + "\n");
  out << "G_I: " << gi.graph.num_vertices() << " vertices, " << gi.graph.num_edges()
      << " edges\n";
  if (!check_c6) return kPositive;

  const auto cycle = contains_cycle_of_length(gi.graph, 6);
  const bool valid23 = static_cast<bool>(is_23sat_instance(f));
  const bool has_bad = !find_bad_pairs(f).empty();
  out << "6-cycle: " << (cycle ? "present" : "absent") << '\n';
  if (valid23 && cycle.has_value() != has_bad) {
    throw VerificationFailure(has_bad ? "bad pair present but no 6-cycle"
                                      : "6-cycle in the graph of a bad-pair-free 23SAT instance");
  }
  return kPositive;
}

// check ---------------------------------------------------------------------------------

Vertex parse_vertex(const std::vector<std::string>& args, std::size_t i, const Graph& g) {
  if (i >= args.size()) throw ContractViolation("missing vertex argument");
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(args[i], &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != args[i].size() || !g.has_vertex(v)) {
    throw ContractViolation("'" + args[i] + "' is not a vertex of the graph");
  }
  return v;
}

int cmd_check(const std::string& kind, const std::string& graph_path,
              const std::vector<std::string>& args, const std::string& witness_path,
              const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(graph_path);
  auto emit_witness = [&](const WitnessFile& w) {
    if (witness_path.empty()) return;
    write_file(witness_path, witness_to_json(w).dump(2) + "\n");
  };

  if (kind == "shed") {
    const Vertex v = parse_vertex(args, 0, g);
    const auto d = is_shedding(g, v, cfg.cap_sets);
    if (d.shedding) {
      out << "shedding\n";
      return kPositive;
    }
    if (cfg.verify && !is_valid_shed_witness(g, v, *d.witness)) {
      throw VerificationFailure("decider returned an invalid witness");
    }
    out << "not shedding, witness " << set_string(d.witness->set_s) << '\n';
    emit_witness({WitnessFile::Kind::kNotShedding, graph_path, {}, v, d.witness->set_s});
    return kNegative;
  }
  if (kind == "relate") {
    const Vertex x = parse_vertex(args, 0, g);
    const Vertex y = parse_vertex(args, 1, g);
    const auto d = is_relating(g, x, y, cfg.cap_sets);
    if (!d.relating) {
      out << "not relating\n";
      return kNegative;
    }
    if (cfg.verify && !is_valid_relating_witness(g, x, y, *d.witness)) {
      throw VerificationFailure("decider returned an invalid witness");
    }
    out << "relating, witness " << set_string(d.witness->set_s) << '\n';
    emit_witness({WitnessFile::Kind::kRelating, graph_path, {x, y}, 0, d.witness->set_s});
    return kPositive;
  }
  if (kind == "cycle") {
    if (args.empty()) throw ContractViolation("missing cycle length");
    const int k = std::stoi(args[0]);
    const auto cycle = contains_cycle_of_length(g, k);
    if (!cycle) {
      out << "no cycle of length " << k << '\n';
      return kNegative;
    }
    out << "cycle";
    for (Vertex v : *cycle) out << ' ' << v;
    out << '\n';
    return kPositive;
  }
  if (kind == "well-covered") {
    const bool wc = is_well_covered(g, cfg.cap_mis);
    out << (wc ? "well-covered\n" : "not well-covered\n");
    return wc ? kPositive : kNegative;
  }
  if (kind == "w2") {
    const bool w2 = is_w2_desk(g, cfg.cap_sets, cfg.cap_mis);
    out << (w2 ? "in W2\n" : "not in W2\n");
    return w2 ? kPositive : kNegative;
  }
  if (kind == "crosscheck") {
    const Vertex x = parse_vertex(args, 0, g);
    const Vertex y = parse_vertex(args, 1, g);
    const auto r = crosscheck_shed_relating(g, x, y, cfg.cap_sets);
    if (!r.hypotheses_met) {
      out << "hypotheses not met: " << r.unmet << '\n';
      return kNegative;
    }
    out << "relating=" << r.relating << " x_shedding=" << r.x_shedding
        << " y_shedding=" << r.y_shedding << '\n';
    if (!r.consistent) throw VerificationFailure("shedding/relating equivalence violated");
    out << "consistent\n";
    return kPositive;
  }
  if (kind == "witness") {
    if (args.empty()) throw ContractViolation("missing witness file");
    const WitnessFile w = witness_from_json(parse_json(read_file(args[0])));
    bool ok = false;
    if (w.kind == WitnessFile::Kind::kRelating) {
      ok = is_valid_relating_witness(g, w.edge.u, w.edge.v, RelatingWitness{w.set});
    } else {
      ok = is_valid_shed_witness(g, w.vertex, ShedComplementWitness{w.set});
    }
    out << (ok ? "witness valid\n" : "witness INVALID\n");
    return ok ? kPositive : kMismatch;
  }
  throw ContractViolation("unknown check '" + kind + "'");
}

// pipeline --------------------------------------------------------------------------------

struct PipelineOutcome {
  std::string verdict;
  int code = kPositive;
};

PipelineOutcome run_pipeline_one(const std::string& in, const fs::path& dir, const RunConfig& cfg,
                                 std::ostream& out) {
  const CnfFormula f = load_cnf(in);
  const PipelineArtifact a = full_pipeline(f);
  write_file(dir / "input.cnf", emit_dimacs(a.input));
  write_file(dir / "units.cnf", emit_dimacs(a.unit_free));
  write_file(dir / "sat23.cnf", emit_dimacs(a.sat23));
  write_file(dir / "nobadpair.cnf", emit_dimacs(a.bad_pair_free));
  write_file(dir / "gi.graph", emit_graph_dimacs(a.gi.graph));
  write_file(dir / "gi.map.json", map_to_json(a.gi.map).dump(2) + "\n");
  write_file(dir / "re.graph", emit_graph_dimacs(a.re.graph));
  Json instance;
  instance["graph"] = "re.graph";
  instance["edge"] = Json::array({a.re.edge.u, a.re.edge.v});
  write_file(dir / "re.json", instance.dump(2) + "\n");
  write_file(dir / "trace.json", trace_to_json(a.trace()).dump(2) + "\n");

  if (!cfg.verify) return {"reduced", kPositive};

  const SolveResult sat = solve(f, cfg.cap_nodes);
  const RelatingDecision re = is_relating(a.re.graph, a.re.edge.u, a.re.edge.v, cfg.cap_sets);
  out << in << ": DPLL " << (sat.satisfiable ? "SAT" : "UNSAT") << ", RE "
      << (re.relating ? "relating" : "not relating") << '\n';
  if (sat.satisfiable != re.relating) throw VerificationFailure("DPLL and RE verdicts disagree");
  if (sat.satisfiable) {
    const RelatingWitness w = forward_witness(a, *sat.model);
    if (!is_valid_relating_witness(a.re.graph, a.re.edge.u, a.re.edge.v, w)) {
      throw VerificationFailure("translated model is not a relating witness");
    }
    const TruthAssignment back = backward_assignment(a, *re.witness);
    if (!evaluate(f, back)) throw VerificationFailure("back-translated witness fails the input");
    write_file(dir / "relating.witness.json",
               witness_to_json({WitnessFile::Kind::kRelating, "re.graph", a.re.edge, 0, w.set_s})
                       .dump(2) +
                   "\n");
    write_file(dir / "model.txt", model_line(back) + "\n");
  }
  return {sat.satisfiable ? "SAT/relating" : "UNSAT/not-relating", kPositive};
}

int cmd_pipeline(const std::vector<std::string>& inputs, const std::string& out_dir,
                 const RunConfig& cfg, std::ostream& out) {
  int worst = kPositive;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    const fs::path dir = inputs.size() == 1
                             ? fs::path(out_dir)
                             : fs::path(out_dir) / [&] {
                                 std::ostringstream ss;
                                 ss << std::setw(4) << std::setfill('0') << i;
                                 return ss.str();
                               }();
    PipelineOutcome o;
    try {
      o = run_pipeline_one(inputs[i], dir, cfg, out);
    } catch (const VerificationFailure& e) {
      o = {std::string("MISMATCH: ") + e.what(), kMismatch};
    } catch (const ResourceError& e) {
      o = {std::string("RESOURCE: ") + e.what(), kResource};
    } catch (const ParseError& e) {
      o = {std::string("PARSE: ") + e.what(), kUsage};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    out << i << '\t' << "pipeline" << '\t' << o.verdict << '\t' << ms << '\n';
    // Severity order: mismatch > resource > parse > ok.
    auto rank = [](int c) { return c == kMismatch ? 3 : c == kResource ? 2 : c == kUsage ? 1 : 0; };
    if (rank(o.code) > rank(worst)) worst = o.code;
  }
  return worst;
}

// gen ------------------------------------------------------------------------------------

int cmd_gen(const std::string& kind, int vars, int clauses, int min_size, int max_size,
            int vertices, int edges, const std::vector<int>& forbid, int retries,
            const std::string& out_path, const RunConfig& cfg, std::ostream& out) {
  Rng rng(cfg.seed);
  std::ostringstream header;
  std::string body;
  if (kind == "sat" || kind == "23sat") {
    if (vars < 1 || vars > 1000000 || clauses < 0 || clauses > 10000000) {
      throw ContractViolation("--vars must be in 1..10^6 and --clauses in 0..10^7");
    }
    CnfFormula f;
    if (kind == "sat") {
      if (min_size < 1 || max_size < min_size) {
        throw ContractViolation("need 1 <= --min-size <= --max-size");
      }
      f = random_formula(rng, vars, clauses, min_size, max_size);
      header << "c relate gen sat --vars " << vars << " --clauses " << clauses << " --min-size "
             << min_size << " --max-size " << max_size << " --seed " << cfg.seed << '\n';
    } else {
      if (vars < 2) throw ContractViolation("23sat generation needs --vars >= 2");
      f = random_23sat(rng, vars, clauses);
      header << "c relate gen 23sat --vars " << vars << " --clauses " << clauses << " --seed "
             << cfg.seed << '\n';
    }
    body = emit_dimacs(f);
  } else if (kind == "graph") {
    if (vertices < 0 || vertices > 100000 || edges < 0 ||
        static_cast<long long>(edges) > static_cast<long long>(vertices) * (vertices - 1) / 2) {
      throw ContractViolation("--edges must fit in a simple graph on --vertices vertices");
    }
    for (int k : forbid) {
      if (k < 3 || k > 8) throw ContractViolation("--forbid lengths must be in 3..8");
    }
    const Graph g = random_graph(rng, vertices, edges, forbid, retries);
    header << "c relate gen graph --vertices " << vertices << " --edges " << edges;
    for (int k : forbid) header << " --forbid " << k;
    header << " --seed " << cfg.seed << '\n';
    body = emit_graph_dimacs(g);
  } else {
    throw ContractViolation("unknown generator '" + kind + "'");
  }
  if (out_path.empty()) {
    out << header.str() << body;
  } else {
    write_file(out_path, header.str() + body);
  }
  return kPositive;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relating edges, shedding vertices and the SAT reduction chain", "relate"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--cap-nodes", cfg.cap_nodes, "DPLL node budget")->check(CLI::PositiveNumber);
    sub->add_option("--cap-sets", cfg.cap_sets, "subset-search node cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cap-mis", cfg.cap_mis, "maximal independent set cap")
        ->check(CLI::PositiveNumber);
  };

  std::string cnf_path, graph_path, out_path, trace_path, map_path, witness_path, kind, out_dir;
  std::vector<std::string> extra, inputs;
  bool brute = false, check_c6 = false;

  auto* solve_cmd = app.add_subcommand("solve", "decide satisfiability of a DIMACS CNF file");
  solve_cmd->add_option("cnf", cnf_path)->required();
  solve_cmd->add_flag("--brute", brute, "exhaustive enumeration instead of DPLL");
  add_caps(solve_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "run one formula reduction stage");
  reduce_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"to23sat", "debadpair"}));
  reduce_cmd->add_option("in", cnf_path)->required();
  reduce_cmd->add_option("out", out_path)->required();
  reduce_cmd->add_option("--trace", trace_path, "trace JSON output");
  reduce_cmd->add_flag("--verify", cfg.verify, "check equisatisfiability with DPLL");
  add_caps(reduce_cmd);

  auto* gi_cmd = app.add_subcommand("build-gi", "build the clause/variable graph of a formula");
  gi_cmd->add_option("cnf", cnf_path)->required();
  gi_cmd->add_option("graph", out_path)->required();
  gi_cmd->add_option("--map", map_path, "vertex map JSON output");
  gi_cmd->add_flag("--check-c6", check_c6, "check 6-cycles against bad pairs");

  auto* check_cmd = app.add_subcommand("check", "decide a graph property");
  check_cmd->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"shed", "relate", "cycle", "well-covered", "w2", "crosscheck",
                             "witness"}));
  check_cmd->add_option("graph", graph_path)->required();
  check_cmd->add_option("args", extra, "vertex, edge endpoints, cycle length or witness file");
  check_cmd->add_option("--witness", witness_path, "witness JSON output");
  check_cmd->add_flag("--verify", cfg.verify, "re-validate witnesses before reporting");
  add_caps(check_cmd);

  auto* pipe_cmd = app.add_subcommand("pipeline", "SAT -> 23SAT -> bad-pair-free -> G_I -> RE");
  pipe_cmd->add_option("cnf", inputs)->required();
  pipe_cmd->add_option("--out-dir", out_dir)->required();
  pipe_cmd->add_flag("--verify", cfg.verify, "DPLL vs brute-force RE, plus witness chain");
  add_caps(pipe_cmd);

  int vars = 6, clauses = 8, min_size = 2, max_size = 3, vertices = 12, edges = 18,
      retries = 10000;
  std::vector<int> forbid;
  auto* gen_cmd = app.add_subcommand("gen", "generate a seeded random instance");
  gen_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"sat", "23sat", "graph"}));
  gen_cmd->add_option("--seed", cfg.seed);
  gen_cmd->add_option("--vars", vars);
  gen_cmd->add_option("--clauses", clauses);
  gen_cmd->add_option("--min-size", min_size);
  gen_cmd->add_option("--max-size", max_size);
  gen_cmd->add_option("--vertices", vertices);
  gen_cmd->add_option("--edges", edges);
  gen_cmd->add_option("--forbid", forbid, "forbidden cycle length (repeatable)");
  gen_cmd->add_option("--retries", retries, "rejected-edge cap")->check(CLI::PositiveNumber);
  gen_cmd->add_option("-o,--out", out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(cnf_path, brute, cfg, out);
    if (*reduce_cmd) return cmd_reduce(kind, cnf_path, out_path, trace_path, cfg, out);
    if (*gi_cmd) return cmd_build_gi(cnf_path, out_path, map_path, check_c6, out);
    if (*check_cmd) return cmd_check(kind, graph_path, extra, witness_path, cfg, out);
    if (*pipe_cmd) return cmd_pipeline(inputs, out_dir, cfg, out);
    if (*gen_cmd) {
      return cmd_gen(kind, vars, clauses, min_size, max_size, vertices, edges, forbid, retries,
                     out_path, cfg, out);
    }
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kMismatch;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid argument\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: argument out of range\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace relate::cli
