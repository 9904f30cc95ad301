#include "relate/reductions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "relate/error.hpp"

namespace relate {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

CnfFormula unsat_core(int num_vars, int a, int b) {
  return CnfFormula::from_dimacs_clauses(num_vars, {{a, b}, {a, -b}, {-a, b}, {-a, -b}});
}

// Clauses left after making every literal of `forced` true. Sets `conflict`
// when some clause loses all its literals.
std::vector<Clause> apply_forced(const std::vector<Clause>& clauses,
                                 const std::vector<Literal>& forced, bool& conflict) {
  std::vector<Clause> out;
  conflict = false;
  for (const auto& c : clauses) {
    bool satisfied = false;
    std::vector<Literal> kept;
    for (Literal l : c) {
      if (std::find(forced.begin(), forced.end(), l) != forced.end()) {
        satisfied = true;
        break;
      }
      if (std::find(forced.begin(), forced.end(), negate(l)) == forced.end()) kept.push_back(l);
    }
    if (satisfied) continue;
    if (kept.empty()) {
      conflict = true;
      continue;
    }
    out.emplace_back(std::move(kept));
  }
  return out;
}

std::vector<Clause> chain_clauses(const ChainSplitStep& step) {
  const auto& lits = step.literals;
  const auto& aux = step.aux;
  const std::size_t k = lits.size();
  std::vector<Clause> out;
  for (std::size_t r = 0; r < k; ++r) {
    std::vector<Literal> c;
    if (r > 0) c.push_back({aux[r - 1], true});
    c.push_back(lits[r]);
    if (r + 1 < k) c.push_back({aux[r], false});
    out.emplace_back(std::move(c));
  }
  return out;
}

CnfFormula delete_clauses(const CnfFormula& f, const std::vector<int>& deleted) {
  std::vector<Clause> kept;
  for (int j = 1; j <= static_cast<int>(f.num_clauses()); ++j) {
    if (std::find(deleted.begin(), deleted.end(), j) == deleted.end()) kept.push_back(f.clause(j));
  }
  return CnfFormula(f.num_vars(), std::move(kept));
}

bool mentions(const CnfFormula& f, int variable) {
  return std::any_of(f.clauses().begin(), f.clauses().end(),
                     [&](const Clause& c) { return c.mentions(variable); });
}

struct SplitInfo {
  std::vector<const UnitPropStep*> units;
  std::vector<const ChainSplitStep*> chains;
  int aux_count = 0;
  int core_count = 0;
  bool conflict = false;
};

SplitInfo collect_split(const ReductionTrace& trace) {
  SplitInfo info;
  for (const auto& step : trace.steps) {
    if (const auto* u = std::get_if<UnitPropStep>(&step)) {
      info.units.push_back(u);
      info.conflict = info.conflict || u->conflict;
      info.core_count += static_cast<int>(u->core_vars.size());
    } else if (const auto* c = std::get_if<ChainSplitStep>(&step)) {
      info.chains.push_back(c);
      info.aux_count += static_cast<int>(c->aux.size());
    } else {
      throw ContractViolation("trace holds steps other than unit propagation and chain splits");
    }
  }
  return info;
}

}  // namespace

// SAT -> 23SAT ------------------------------------------------------------------

Reduced<CnfFormula> propagate_units(const CnfFormula& f) {
  UnitPropStep step;
  std::vector<Clause> current = f.clauses();
  for (;;) {
    auto unit = std::find_if(current.begin(), current.end(),
                             [](const Clause& c) { return c.size() == 1; });
    if (unit == current.end()) break;
    const Literal l = *unit->begin();
    step.forced.push_back(l);
    bool conflict = false;
    current = apply_forced(current, {l}, conflict);
    if (conflict) {
      step.conflict = true;
      break;
    }
  }
  Reduced<CnfFormula> out;
  if (step.conflict) {
    const int n = f.num_vars();
    step.core_vars = {n + 1, n + 2};
    out.result = unsat_core(n + 2, n + 1, n + 2);
  } else {
    out.result = CnfFormula(f.num_vars(), std::move(current));
  }
  out.trace.steps.emplace_back(std::move(step));
  return out;
}

Reduced<CnfFormula> sat_to_23sat(const CnfFormula& f) {
  Reduced<CnfFormula> out;
  int next = f.num_vars() + 1;
  std::vector<Clause> clauses;
  for (int j = 1; j <= static_cast<int>(f.num_clauses()); ++j) {
    const Clause& c = f.clause(j);
    if (c.size() < 2) {
      throw ContractViolation("clause " + std::to_string(j) +
                              " is a unit clause; propagate units before splitting");
    }
    ChainSplitStep step;
    step.clause = j;
    step.literals.assign(c.begin(), c.end());
    for (std::size_t r = 0; r + 1 < c.size(); ++r) step.aux.push_back(next++);
    auto chain = chain_clauses(step);
    clauses.insert(clauses.end(), chain.begin(), chain.end());
    out.trace.steps.emplace_back(std::move(step));
  }
  out.result = CnfFormula(next - 1, std::move(clauses));
  return out;
}

Reduced<CnfFormula> to_23sat(const CnfFormula& f) {
  auto units = propagate_units(f);
  auto split = sat_to_23sat(units.result);
  units.trace.append(split.trace);
  return {std::move(split.result), std::move(units.trace)};
}

TruthAssignment lift_assignment(const ReductionTrace& trace, const TruthAssignment& source_model) {
  const SplitInfo info = collect_split(trace);
  if (info.conflict) {
    throw ContractViolation("unit propagation found the source unsatisfiable; nothing to lift");
  }
  for (const auto* u : info.units) {
    for (Literal l : u->forced) {
      if (!source_model.value(l)) {
        throw ContractViolation("assignment does not satisfy the unit clause " +
                                std::to_string(l.to_dimacs()));
      }
    }
  }
  TruthAssignment out(source_model.num_vars() + info.aux_count);
  for (int v = 1; v <= source_model.num_vars(); ++v) out.set(v, source_model.value(v));
  int expected_aux = source_model.num_vars() + 1;
  for (const auto* chain : info.chains) {
    for (int a : chain->aux) {
      if (a != expected_aux++) {
        throw ContractViolation("assignment size does not match the trace's variable numbering");
      }
    }
    auto first_true = std::find_if(chain->literals.begin(), chain->literals.end(),
                                   [&](Literal l) { return source_model.value(l); });
    if (first_true == chain->literals.end()) {
      throw ContractViolation("assignment does not satisfy source clause " +
                              std::to_string(chain->clause));
    }
    const auto r = static_cast<std::size_t>(first_true - chain->literals.begin());
    for (std::size_t i = 0; i < chain->aux.size(); ++i) out.set(chain->aux[i], i < r);
  }
  return out;
}

TruthAssignment project_assignment(const ReductionTrace& trace, const TruthAssignment& split_model) {
  const SplitInfo info = collect_split(trace);
  for (const auto* chain : info.chains) {
    for (const auto& c : chain_clauses(*chain)) {
      if (std::none_of(c.begin(), c.end(), [&](Literal l) { return split_model.value(l); })) {
        throw ContractViolation("assignment does not satisfy the split of source clause " +
                                std::to_string(chain->clause));
      }
    }
  }
  const int n = split_model.num_vars() - info.aux_count - info.core_count;
  if (n < 0) throw ContractViolation("assignment is smaller than the trace's variable range");
  TruthAssignment out(n);
  for (int v = 1; v <= n; ++v) out.set(v, split_model.value(v));
  for (const auto* u : info.units) {
    for (Literal l : u->forced) out.set(l, true);
  }
  for (const auto* chain : info.chains) {
    if (std::none_of(chain->literals.begin(), chain->literals.end(),
                     [&](Literal l) { return out.value(l); })) {
      throw std::logic_error("projected assignment misses source clause " +
                             std::to_string(chain->clause));
    }
  }
  return out;
}

// Bad pairs --------------------------------------------------------------------------------

Reduced<CnfFormula> eliminate_bad_pairs(const CnfFormula& f) {
  if (auto check = is_23sat_instance(f); !check) {
    throw ContractViolation("not a 23SAT instance: " + check.violation);
  }
  Reduced<CnfFormula> out{f, {}};
  CnfFormula& cur = out.result;
  auto pairs = find_bad_pairs(cur);
  while (!pairs.empty()) {
    const BadPair p = pairs.front();
    const auto cls = classify_literals(cur);
    Literal l1 = p.lit_1, l2 = p.lit_2;
    if (cls.is_major(l1)) std::swap(l1, l2);
    if (cls.is_major(l1)) {
      throw std::logic_error("clause " + std::to_string(p.clause_a) + " holds two major literals");
    }
    const int before = static_cast<int>(pairs.size());
    if (!cls.is_major(negate(l2))) {
      BadPairCase1Step step{p, l1, l2, {}};
      for (int j = 1; j <= static_cast<int>(cur.num_clauses()); ++j) {
        const Clause& c = cur.clause(j);
        if (c.contains(negate(l1)) || c.contains(l2)) step.deleted.push_back(j);
      }
      cur = delete_clauses(cur, step.deleted);
      if (mentions(cur, l1.variable) || mentions(cur, l2.variable)) {
        throw std::logic_error("forced variables survived a case-1 elimination");
      }
      out.trace.steps.emplace_back(std::move(step));
    } else {
      if (cls.is_major(negate(l1))) {
        throw std::logic_error("clause " + std::to_string(p.clause_b) +
                               " holds two major literals");
      }
      BadPairCase2Step step{p, l1, l2, {p.clause_a, p.clause_b}};
      cur = delete_clauses(cur, step.deleted);
      if (mentions(cur, l1.variable)) {
        throw std::logic_error("substituted variable survived a case-2 elimination");
      }
      out.trace.steps.emplace_back(std::move(step));
    }
    pairs = find_bad_pairs(cur);
    if (static_cast<int>(pairs.size()) >= before) {
      throw std::logic_error("bad-pair count did not decrease");
    }
  }
  return out;
}

TruthAssignment backfill_assignment(const CnfFormula& input, const ReductionTrace& trace,
                                    const TruthAssignment& reduced_model) {
  for (const auto& step : trace.steps) {
    if (!std::holds_alternative<BadPairCase1Step>(step) &&
        !std::holds_alternative<BadPairCase2Step>(step)) {
      throw ContractViolation("backfill expects a bad-pair elimination trace");
    }
  }
  const CnfFormula reduced = replay(input, trace);
  if (!evaluate(reduced, reduced_model)) {
    throw ContractViolation("assignment does not satisfy the reduced instance");
  }
  TruthAssignment t(input.num_vars());
  for (int v = 1; v <= input.num_vars(); ++v) {
    t.set(v, mentions(reduced, v) && reduced_model.value(v));
  }
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    std::visit(overloaded{
                   [&](const BadPairCase1Step& s) {
                     t.set(s.l1, false);
                     t.set(s.l2, true);
                   },
                   [&](const BadPairCase2Step& s) { t.set(s.l1, !t.value(s.l2)); },
                   [](const auto&) {},
               },
               *it);
  }
  if (!evaluate(input, t)) throw std::logic_error("backfilled assignment fails the input");
  return t;
}

CnfFormula replay(const CnfFormula& source, const ReductionTrace& trace) {
  CnfFormula cur = source;
  const auto& steps = trace.steps;
  for (std::size_t i = 0; i < steps.size();) {
    if (const auto* u = std::get_if<UnitPropStep>(&steps[i])) {
      bool conflict = false;
      auto clauses = apply_forced(cur.clauses(), u->forced, conflict);
      if (conflict != u->conflict) throw ContractViolation("unit-prop step does not replay");
      if (conflict) {
        if (u->core_vars.size() != 2) throw ContractViolation("conflict step needs two core vars");
        cur = unsat_core(cur.num_vars() + 2, u->core_vars[0], u->core_vars[1]);
      } else {
        cur = CnfFormula(cur.num_vars(), std::move(clauses));
      }
      ++i;
    } else if (std::holds_alternative<ChainSplitStep>(steps[i])) {
      std::vector<Clause> clauses;
      int next = cur.num_vars() + 1;
      int j = 1;
      for (; i < steps.size() && std::holds_alternative<ChainSplitStep>(steps[i]); ++i, ++j) {
        const auto& s = std::get<ChainSplitStep>(steps[i]);
        if (s.clause != j || j > static_cast<int>(cur.num_clauses()) ||
            !std::equal(s.literals.begin(), s.literals.end(), cur.clause(j).begin(),
                        cur.clause(j).end()) ||
            s.aux.size() + 1 != s.literals.size()) {
          throw ContractViolation("chain-split step for clause " + std::to_string(s.clause) +
                                  " does not match the source");
        }
        for (int a : s.aux) {
          if (a != next++) throw ContractViolation("chain-split auxiliaries are not contiguous");
        }
        auto chain = chain_clauses(s);
        clauses.insert(clauses.end(), chain.begin(), chain.end());
      }
      if (j - 1 != static_cast<int>(cur.num_clauses())) {
        throw ContractViolation("chain-split steps do not cover every clause");
      }
      cur = CnfFormula(next - 1, std::move(clauses));
    } else if (const auto* c1 = std::get_if<BadPairCase1Step>(&steps[i])) {
      cur = delete_clauses(cur, c1->deleted);
      ++i;
    } else if (const auto* c2 = std::get_if<BadPairCase2Step>(&steps[i])) {
      cur = delete_clauses(cur, c2->deleted);
      ++i;
    } else {
      ++i;
    }
  }
  return cur;
}

Graph replay(const Graph& source, const ReductionTrace& trace) {
  Graph g = source;
  for (const auto& step : trace.steps) {
    if (const auto* p = std::get_if<PendantStep>(&step)) {
      if (p->y != g.num_vertices() + 1 || !g.has_vertex(p->x)) {
        throw ContractViolation("pendant step does not match the graph");
      }
      g.add_vertex();
      g.add_edge(p->x, p->y);
    }
  }
  return g;
}

// Formula -> graph -----------------------------------------------------------------------

SatGraph build_g_i(const CnfFormula& f) {
  const int n = f.num_vars();
  const int m = static_cast<int>(f.num_clauses());
  SatGraph out{Graph(1 + m + 2 * n), {}};
  auto& map = out.map;
  map.hub = 1;
  for (int j = 1; j <= m; ++j) map.clause_vertex.push_back(1 + j);
  for (int i = 1; i <= n; ++i) {
    map.pos_vertex.push_back(m + 2 * i);
    map.neg_vertex.push_back(m + 2 * i + 1);
  }
  for (int j = 1; j <= m; ++j) {
    out.graph.add_edge(map.hub, map.clause(j));
    for (Literal l : f.clause(j)) out.graph.add_edge(map.clause(j), map.literal(l));
  }
  for (int i = 1; i <= n; ++i) out.graph.add_edge(map.pos(i), map.neg(i));
  return out;
}

ShedComplementWitness assignment_to_witness(const SatGraph& gi, const TruthAssignment& t) {
  if (t.num_vars() < gi.map.num_vars()) {
    throw ContractViolation("assignment covers fewer variables than the graph encodes");
  }
  const VertexSet layer2 = neighborhood_layer(gi.graph, gi.map.hub, 2);
  ShedComplementWitness s;
  for (int i = 1; i <= gi.map.num_vars(); ++i) {
    const Vertex chosen = t.value(i) ? gi.map.pos(i) : gi.map.neg(i);
    if (layer2.contains(chosen)) s.set_s.insert(chosen);
  }
  if (!is_valid_shed_witness(gi.graph, gi.map.hub, s)) {
    throw ContractViolation("assignment does not satisfy the encoded formula");
  }
  return s;
}

TruthAssignment witness_to_assignment(const SatGraph& gi, const ShedComplementWitness& s) {
  if (!is_valid_shed_witness(gi.graph, gi.map.hub, s)) {
    throw ContractViolation("set is not an independent dominator of the hub's neighbors in N_2");
  }
  TruthAssignment t(gi.map.num_vars());
  for (int i = 1; i <= gi.map.num_vars(); ++i) t.set(i, s.set_s.contains(gi.map.pos(i)));
  return t;
}

// SHED complement -> RE ---------------------------------------------------------------------------

ReInstance shed_to_re(const Graph& g, Vertex x) {
  if (!g.has_vertex(x)) throw ContractViolation("vertex " + std::to_string(x) + " not in graph");
  ReInstance out{g, {}, {}};
  const Vertex y = out.graph.add_vertex();
  out.graph.add_edge(x, y);
  out.edge = {x, y};
  out.trace.steps.emplace_back(PendantStep{x, y});
  return out;
}

RelatingWitness shed_witness_to_re_witness(const Graph& g, Vertex x,
                                           const ShedComplementWitness& s) {
  if (!is_valid_shed_witness(g, x, s)) {
    throw ContractViolation("not a valid non-shedding witness for vertex " + std::to_string(x));
  }
  std::vector<bool> blocked(static_cast<std::size_t>(g.num_vertices()) + 1, false);
  auto block_around = [&](Vertex v) {
    blocked[v] = true;
    for (Vertex w : g.neighbors(v)) blocked[w] = true;
  };
  block_around(x);
  for (Vertex v : s.set_s) block_around(v);
  RelatingWitness w{s.set_s};
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    if (blocked[v]) continue;
    w.set_s.insert(v);
    block_around(v);
  }
  return w;
}

ShedComplementWitness re_witness_to_shed_witness(const Graph& g_prime, Edge edge,
                                                 const RelatingWitness& w) {
  const Vertex x = edge.u, y = edge.v;
  if (!g_prime.has_vertex(y) || y != g_prime.num_vertices() || g_prime.degree(y) != 1 ||
      !g_prime.adjacent(x, y)) {
    throw ContractViolation("edge does not end in the pendant vertex of the graph");
  }
  if (!is_valid_relating_witness(g_prime, x, y, w)) {
    throw ContractViolation("not a valid relating witness for the pendant edge");
  }
  Graph g(g_prime.num_vertices() - 1);
  for (auto e : g_prime.edges()) {
    if (e.v != y) g.add_edge(e.u, e.v);
  }
  const VertexSet layer2 = neighborhood_layer(g, x, 2);
  ShedComplementWitness s;
  std::set_intersection(w.set_s.begin(), w.set_s.end(), layer2.begin(), layer2.end(),
                        std::inserter(s.set_s, s.set_s.end()));
  if (!is_valid_shed_witness(g, x, s)) {
    throw std::logic_error("restricted relating witness failed to dominate N(x)");
  }
  return s;
}

// Full chain -------------------------------------------------------------------------------

ReductionTrace PipelineArtifact::trace() const {
  ReductionTrace t = units_trace;
  t.append(split_trace);
  t.append(elimination_trace);
  t.append(re.trace);
  return t;
}

PipelineArtifact full_pipeline(const CnfFormula& f) {
  PipelineArtifact a;
  a.input = f;
  auto units = propagate_units(f);
  a.unit_free = units.result;
  a.units_trace = std::move(units.trace);
  auto split = sat_to_23sat(a.unit_free);
  a.sat23 = split.result;
  a.split_trace = std::move(split.trace);
  auto elim = eliminate_bad_pairs(a.sat23);
  a.bad_pair_free = elim.result;
  a.elimination_trace = std::move(elim.trace);
  a.gi = build_g_i(a.bad_pair_free);
  a.re = shed_to_re(a.gi.graph, a.gi.map.hub);
  if (auto cycle = contains_cycle_of_length(a.re.graph, 6)) {
    throw std::logic_error("pipeline produced a graph with a 6-cycle");
  }
  return a;
}

RelatingWitness forward_witness(const PipelineArtifact& a, const TruthAssignment& input_model) {
  ReductionTrace split = a.units_trace;
  split.append(a.split_trace);
  const TruthAssignment t23 = lift_assignment(split, input_model);
  const ShedComplementWitness s = assignment_to_witness(a.gi, t23);
  return shed_witness_to_re_witness(a.gi.graph, a.gi.map.hub, s);
}

TruthAssignment backward_assignment(const PipelineArtifact& a, const RelatingWitness& w) {
  const ShedComplementWitness s = re_witness_to_shed_witness(a.re.graph, a.re.edge, w);
  const TruthAssignment t_free = witness_to_assignment(a.gi, s);
  const TruthAssignment t23 = backfill_assignment(a.sat23, a.elimination_trace, t_free);
  ReductionTrace split = a.units_trace;
  split.append(a.split_trace);
  return project_assignment(split, t23);
}

}  // namespace relate
