// Acceptance campaign. Usage: acceptance [criterion ...]; no arguments runs all
// nine. Prints one PASS/FAIL line per criterion and exits nonzero on any FAIL.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "relate/decide.hpp"
#include "relate/error.hpp"
#include "relate/generate.hpp"
#include "relate/reductions.hpp"
#include "relate/sat_solve.hpp"

using namespace relate;

namespace {

struct Outcome {
  long failures = 0;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> body;
};

std::string str(const CnfFormula& f) {
  std::ostringstream ss;
  for (const auto& c : f.clauses()) {
    ss << '(';
    for (const auto& l : c) ss << ' ' << l.to_dimacs();
    ss << " )";
  }
  return ss.str();
}

std::vector<Literal> literals_between(const CnfFormula& f) {
  std::vector<Literal> out;
  for (const auto& c : f.clauses()) out.insert(out.end(), c.begin(), c.end());
  return out;
}

// Random graph with the given forbidden cycle lengths; on an exhausted retry
// cap the next substream is tried, so every index yields a graph.
Graph forbidden_free_graph(std::uint64_t seed, std::uint64_t index, int n, int m,
                           const std::vector<int>& forbid) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng = Rng::for_instance(seed ^ (attempt * 0x9e3779b97f4a7c15ULL), index);
    try {
      return random_graph(rng, n, m, forbid, 2000);
    } catch (const ResourceError&) {
      if (attempt > 50) m = std::max(0, m - 1);
    }
  }
}

// 1 -------------------------------------------------------------------------------------------
Outcome sat_to_23sat_equivalence() {
  Outcome o;
  long sat = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    Rng rng = Rng::for_instance(1001, i);
    const int vars = rng.between(3, 8);
    const CnfFormula f = random_formula(rng, vars, rng.between(2, 8), 2, 5);
    const auto r = sat_to_23sat(f);
    const bool before = solve(f).satisfiable;
    const auto after = solve(r.result);
    if (before != after.satisfiable) o.fail("verdict changed on " + str(f));
    if (before != oracle::satisfiable(f)) o.fail("DPLL disagrees with enumeration on " + str(f));
    if (!is_23sat_instance(r.result)) o.fail("output not 23SAT for " + str(f));
    if (replay(f, r.trace) != r.result) o.fail("trace does not replay for " + str(f));
    if (before) {
      ++sat;
      const auto model = solve(f).model;
      if (!evaluate(r.result, lift_assignment(r.trace, *model))) o.fail("lift failed on " + str(f));
      if (!evaluate(f, project_assignment(r.trace, *after.model))) o.fail("project failed on " + str(f));
    }
  }
  o.detail = "500 formulas, " + std::to_string(sat) + " satisfiable";
  return o;
}

// 2 -------------------------------------------------------------------------------------------
Outcome bad_pair_elimination() {
  Outcome o;
  long with_pairs = 0, iterations = 0, case1 = 0, case2 = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    Rng rng = Rng::for_instance(2002, i);
    const CnfFormula f = random_23sat(rng, rng.between(3, 10), rng.between(2, 10));
    if (!is_23sat_instance(f)) {
      o.fail("generator produced invalid 23SAT");
      continue;
    }
    const auto r = eliminate_bad_pairs(f);
    if (!find_bad_pairs(r.result).empty()) o.fail("bad pairs remain in " + str(r.result));
    if (!is_23sat_instance(r.result)) o.fail("output not 23SAT: " + str(r.result));
    const auto before = solve(f), after = solve(r.result);
    if (before.satisfiable != after.satisfiable) o.fail("verdict changed on " + str(f));
    if (after.satisfiable && !evaluate(f, backfill_assignment(f, r.trace, *after.model))) {
      o.fail("backfill failed on " + str(f));
    }
    // Replay prefixes of the trace and watch the count fall.
    std::size_t prev = find_bad_pairs(f).size();
    if (prev > 0) ++with_pairs;
    ReductionTrace prefix;
    for (const auto& step : r.trace.steps) {
      prefix.steps.push_back(step);
      case1 += std::holds_alternative<BadPairCase1Step>(step);
      case2 += std::holds_alternative<BadPairCase2Step>(step);
      const std::size_t now = find_bad_pairs(replay(f, prefix)).size();
      ++iterations;
      if (now >= prev) o.fail("bad-pair count did not decrease on " + str(f));
      prev = now;
    }
    if (replay(f, r.trace) != r.result) o.fail("trace does not replay for " + str(f));
  }
  if (with_pairs < 50) o.fail("too few instances with bad pairs to exercise elimination");
  o.detail = "500 instances, " + std::to_string(with_pairs) + " with bad pairs, " +
             std::to_string(iterations) + " iterations (" + std::to_string(case1) + " case 1, " +
             std::to_string(case2) + " case 2)";
  return o;
}

// 3 -------------------------------------------------------------------------------------------
Outcome sat_reduction_biconditional() {
  Outcome o;
  long sat = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng = Rng::for_instance(3003, i);
    const CnfFormula f = random_formula(rng, rng.between(1, 7), rng.between(1, 9), 1, 4);
    const SatGraph gi = build_g_i(f);
    const auto s = solve(f);
    const auto shed = is_shedding(gi.graph, gi.map.hub);
    if (s.satisfiable == shed.shedding) o.fail("biconditional broken on " + str(f));
    if (!s.satisfiable) continue;
    ++sat;
    if (!is_valid_shed_witness(gi.graph, gi.map.hub, assignment_to_witness(gi, *s.model))) {
      o.fail("assignment_to_witness invalid on " + str(f));
    }
    if (shed.witness && !evaluate(f, witness_to_assignment(gi, *shed.witness))) {
      o.fail("witness_to_assignment unsatisfying on " + str(f));
    }
  }
  o.detail = "300 formulas, " + std::to_string(sat) + " satisfiable";
  return o;
}

// 4 -------------------------------------------------------------------------------------------
CnfFormula one_bad_pair_instance(std::uint64_t index) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng = Rng::for_instance(4005 + attempt * 7919, index);
    const CnfFormula base =
        eliminate_bad_pairs(random_23sat(rng, rng.between(2, 8), rng.between(0, 7))).result;
    const int n = base.num_vars();
    // Fresh variables a = n+1, b = n+2, optional thirds c = n+3, d = n+4.
    auto lit = [&](int v) { return rng.coin() ? v : -v; };
    const int a = lit(n + 1), b = lit(n + 2);
    std::vector<int> c1{a, b}, c2{-a, -b};
    const auto existing = literals_between(base);
    if (rng.coin()) c1.push_back(rng.coin() && !existing.empty()
                                     ? existing[rng.below(existing.size())].to_dimacs()
                                     : n + 3);
    if (rng.coin()) c2.push_back(n + 4);
    std::vector<std::vector<int>> clauses;
    for (const auto& c : base.clauses()) {
      std::vector<int> d;
      for (const auto& l : c) d.push_back(l.to_dimacs());
      clauses.push_back(d);
    }
    clauses.insert(clauses.begin() + static_cast<long>(rng.below(clauses.size() + 1)), c1);
    clauses.insert(clauses.begin() + static_cast<long>(rng.below(clauses.size() + 1)), c2);
    const CnfFormula f = CnfFormula::from_dimacs_clauses(n + 4, clauses);
    if (is_23sat_instance(f) && find_bad_pairs(f).size() == 1) return f;
  }
}

Outcome c6_freeness() {
  Outcome o;
  long vertices = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng = Rng::for_instance(4004, i);
    const CnfFormula f =
        eliminate_bad_pairs(random_23sat(rng, rng.between(2, 10), rng.between(1, 10))).result;
    if (!is_23sat_instance(f) || !find_bad_pairs(f).empty()) {
      o.fail("instance is not a bad-pair-free 23SAT instance");
      continue;
    }
    const Graph g = build_g_i(f).graph;
    vertices += g.num_vertices();
    if (contains_cycle_of_length(g, 6)) o.fail("6-cycle in G_I of " + str(f));
  }
  for (std::uint64_t i = 0; i < 100; ++i) {
    const CnfFormula f = one_bad_pair_instance(i);
    if (!contains_cycle_of_length(build_g_i(f).graph, 6)) o.fail("no 6-cycle despite bad pair in " + str(f));
  }
  o.detail = "300 bad-pair-free instances (avg " + std::to_string(vertices / 300) +
             " vertices) with no C6; 100 single-bad-pair instances all with a C6";
  return o;
}

// 5 -------------------------------------------------------------------------------------------
Outcome pendant_equivalence() {
  Outcome o;
  long positive = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng = Rng::for_instance(5005, i);
    const int n = rng.between(2, 14);
    const int m = rng.between(n / 2, std::min(n * (n - 1) / 2, n + n / 2));
    const Graph g = forbidden_free_graph(5006, i, n, m, {6});
    if (contains_cycle_of_length(g, 6)) {
      o.fail("generator produced a 6-cycle");
      continue;
    }
    const Vertex x = rng.between(1, n);
    const ReInstance re = shed_to_re(g, x);
    if (contains_cycle_of_length(re.graph, 6)) o.fail("pendant created a 6-cycle");
    const auto shed = is_shedding(g, x);
    const auto rel = is_relating(re.graph, re.edge.u, re.edge.v);
    if (shed.shedding == rel.relating) o.fail("equivalence broken at vertex " + std::to_string(x));
    if (rel.relating != oracle::relating(re.graph, re.edge.u, re.edge.v).has_value()) {
      o.fail("RE decider disagrees with the powerset oracle");
    }
    if (!rel.relating) continue;
    ++positive;
    const auto w = shed_witness_to_re_witness(g, x, *shed.witness);
    if (!is_valid_relating_witness(re.graph, re.edge.u, re.edge.v, w)) o.fail("S* is not relating");
    const auto back = re_witness_to_shed_witness(re.graph, re.edge, *rel.witness);
    if (!is_valid_shed_witness(g, x, back)) o.fail("restricted witness invalid");
  }
  o.detail = "300 C6-free graphs, " + std::to_string(positive) + " relating pendant edges";
  return o;
}

// 6 -------------------------------------------------------------------------------------------
Outcome end_to_end() {
  Outcome o;
  long sat = 0, largest = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = Rng::for_instance(6006, i);
    const CnfFormula f = random_formula(rng, rng.between(1, 6), rng.between(1, 6), 1, 4);
    const PipelineArtifact a = full_pipeline(f);
    largest = std::max<long>(largest, a.re.graph.num_vertices());
    if (contains_cycle_of_length(a.re.graph, 6)) o.fail("final graph has a C6 for " + str(f));
    const auto s = solve(f);
    const auto rel = is_relating(a.re.graph, a.re.edge.u, a.re.edge.v);
    if (s.satisfiable != rel.relating) o.fail("DPLL and RE disagree on " + str(f));
    if (!s.satisfiable) continue;
    ++sat;
    const RelatingWitness w = forward_witness(a, *s.model);
    if (!is_valid_relating_witness(a.re.graph, a.re.edge.u, a.re.edge.v, w)) {
      o.fail("composed witness invalid for " + str(f));
    }
    if (rel.witness && !evaluate(f, backward_assignment(a, *rel.witness))) {
      o.fail("backward chain unsatisfying for " + str(f));
    }
  }
  o.detail = "200 formulas, " + std::to_string(sat) + " satisfiable, largest RE graph " +
             std::to_string(largest) + " vertices";
  return o;
}

// 7 -------------------------------------------------------------------------------------------
void check_graph_deciders(const Graph& g, Outcome& o) {
  for (const Edge e : g.edges()) {
    const auto d = is_relating(g, e.u, e.v);
    const auto ref = oracle::relating(g, e.u, e.v);
    if (d.relating != ref.has_value() || (ref && d.witness->set_s != *ref)) {
      o.fail("is_relating mismatch on an edge of a " + std::to_string(g.num_vertices()) + "-vertex graph");
    }
  }
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    const auto d = is_shedding(g, v);
    const auto ref = oracle::not_shedding(g, v);
    if (d.shedding == ref.has_value() || (ref && d.witness->set_s != *ref)) {
      o.fail("is_shedding mismatch on a " + std::to_string(g.num_vertices()) + "-vertex graph");
    }
  }
  if (is_well_covered(g) != oracle::well_covered(g)) o.fail("is_well_covered mismatch");
}

Outcome decider_soundness() {
  Outcome o;
  long labeled = 0;
  for (int n = 1; n <= 6; ++n) {
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask, ++labeled) {
      check_graph_deciders(oracle::graph_from_mask(n, mask), o);
    }
  }
  const auto classes = oracle::nonisomorphic_graphs(7);
  // Published count of graphs on 7 vertices up to isomorphism.
  if (classes.size() != 1044) o.fail("expected 1044 classes on 7 vertices, got " + std::to_string(classes.size()));
  for (const Graph& g : classes) check_graph_deciders(g, o);
  o.detail = std::to_string(labeled) + " labeled graphs on <= 6 vertices, " +
             std::to_string(classes.size()) + " isomorphism classes on 7 vertices";
  return o;
}

// 8 -------------------------------------------------------------------------------------------
Outcome shed_relating_crosscheck() {
  Outcome o;
  long checked = 0, relating = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = Rng::for_instance(8008, i);
    const int n = rng.between(6, 16);
    const Graph g = forbidden_free_graph(8009, i, n, rng.between(n - 1, n + 4), {4, 5, 6});
    for (int k : {4, 5, 6}) {
      if (contains_cycle_of_length(g, k)) o.fail("generator produced a forbidden cycle");
    }
    for (const Edge e : g.edges()) {
      const auto r = crosscheck_shed_relating(g, e.u, e.v);
      if (!r.hypotheses_met) continue;
      ++checked;
      relating += r.relating;
      if (!r.consistent) {
        std::ostringstream ss;
        ss << "counterexample on edge " << e.u << '-' << e.v;
        o.fail(ss.str());
      }
    }
  }
  if (checked == 0) o.fail("no edge met the hypotheses");
  o.detail = "200 graphs, " + std::to_string(checked) + " hypothesis edges, " +
             std::to_string(relating) + " relating";
  return o;
}

// 9 -------------------------------------------------------------------------------------------
Outcome structural_invariant() {
  Outcome o;
  long pairs_checked = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = Rng::for_instance(9009, i);
    const int n = rng.between(6, 18);
    const Graph g = forbidden_free_graph(9010, i, n, rng.between(n - 1, n + n / 2), {6});
    const auto d = oracle::all_distances(g);
    for (const Edge e : g.edges()) {
      std::vector<Vertex> sx, sy;
      for (Vertex v = 1; v <= n; ++v) {
        if (d[e.u][v] == 2 && d[e.v][v] == 3) sx.push_back(v);
        if (d[e.v][v] == 2 && d[e.u][v] == 3) sy.push_back(v);
      }
      for (Vertex a : sx)
        for (Vertex b : sy) {
          ++pairs_checked;
          if (g.adjacent(a, b)) o.fail("edge between the two layers");
        }
    }
  }
  o.detail = "200 C6-free graphs, " + std::to_string(pairs_checked) + " cross-layer pairs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "SAT to 23SAT equivalence", 60, sat_to_23sat_equivalence},
      {2, "bad-pair elimination", 60, bad_pair_elimination},
      {3, "hub shedding iff unsatisfiable", 120, sat_reduction_biconditional},
      {4, "G_I C6-freeness and its converse", 120, c6_freeness},
      {5, "pendant reduction equivalence", 180, pendant_equivalence},
      {6, "end-to-end pipeline", 300, end_to_end},
      {7, "decider soundness on all small graphs", 300, decider_soundness},
      {8, "shedding/relating cross-check", 120, shed_relating_crosscheck},
      {9, "no edges between opposite second layers", 60, structural_invariant},
  };
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  int failed = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) o.fail("time limit exceeded");
    const bool pass = o.failures == 0;
    failed += !pass;
    std::printf("%s criterion %d: %s | %s | %.2fs (limit %.0fs)", pass ? "PASS" : "FAIL", c.id,
                c.title, o.detail.c_str(), secs, c.limit_seconds);
    if (!pass) std::printf(" | %ld failures, first: %s", o.failures, o.first_failure.c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
