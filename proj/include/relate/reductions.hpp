#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "relate/cnf.hpp"
#include "relate/decide.hpp"
#include "relate/graph.hpp"

namespace relate {

/// Vertex dictionary of the clause/variable graph: hub = 1, clause j at 1 + j,
/// variable i at m + 2i (positive) and m + 2i + 1 (negative).
struct SatGraphMap {
  Vertex hub = 1;
  std::vector<Vertex> clause_vertex;  ///< index j - 1
  std::vector<Vertex> pos_vertex;     ///< index i - 1
  std::vector<Vertex> neg_vertex;     ///< index i - 1

  Vertex clause(int j) const { return clause_vertex.at(static_cast<std::size_t>(j - 1)); }
  Vertex pos(int i) const { return pos_vertex.at(static_cast<std::size_t>(i - 1)); }
  Vertex neg(int i) const { return neg_vertex.at(static_cast<std::size_t>(i - 1)); }
  Vertex literal(Literal l) const { return l.negated ? neg(l.variable) : pos(l.variable); }
  int num_vars() const { return static_cast<int>(pos_vertex.size()); }

  bool operator==(const SatGraphMap&) const = default;
};

// Trace steps --------------------------------------------------------------------

/// Unit propagation to fixpoint. On conflict the formula is replaced by the
/// four 2-clauses over two fresh variables `core_vars`, which no assignment satisfies.
struct UnitPropStep {
  std::vector<Literal> forced;
  bool conflict = false;
  std::vector<int> core_vars;
  bool operator==(const UnitPropStep&) const = default;
};

/// Clause `clause` (1-based in the source) split into a chain over `aux`.
struct ChainSplitStep {
  int clause = 0;
  std::vector<Literal> literals;
  std::vector<int> aux;
  bool operator==(const ChainSplitStep&) const = default;
};

/// l1 is forced false and l2 true; every clause holding ~l1 or l2 is deleted.
struct BadPairCase1Step {
  BadPair pair;
  Literal l1;
  Literal l2;
  std::vector<int> deleted;
  bool operator==(const BadPairCase1Step&) const = default;
};

/// l1 takes the value opposite to l2; both clauses of the pair are deleted.
struct BadPairCase2Step {
  BadPair pair;
  Literal l1;
  Literal l2;
  std::vector<int> deleted;
  bool operator==(const BadPairCase2Step&) const = default;
};

/// Vertex y attached to x as a pendant.
struct PendantStep {
  Vertex x = 0;
  Vertex y = 0;
  bool operator==(const PendantStep&) const = default;
};

using TraceStep =
    std::variant<UnitPropStep, ChainSplitStep, BadPairCase1Step, BadPairCase2Step, PendantStep>;

struct ReductionTrace {
  std::vector<TraceStep> steps;

  void append(const ReductionTrace& other) {
    steps.insert(steps.end(), other.steps.begin(), other.steps.end());
  }
  bool operator==(const ReductionTrace&) const = default;
};

template <typename Result>
struct Reduced {
  Result result;
  ReductionTrace trace;
};

// SAT -> 23SAT ---------------------------------------------------------------------

/// Removes unit clauses by propagation (one UnitPropStep, possibly empty).
Reduced<CnfFormula> propagate_units(const CnfFormula& f);

/// Splits every clause l_1..l_k into the chain
/// {l_1, y_1}, {~y_1, l_2, y_2}, ..., {~y_{k-1}, l_k}. Fresh variables are
/// numbered from num_vars + 1 in clause order. Unit clauses are rejected.
Reduced<CnfFormula> sat_to_23sat(const CnfFormula& f);

/// propagate_units followed by sat_to_23sat, with the traces concatenated.
Reduced<CnfFormula> to_23sat(const CnfFormula& f);

/// Extends a model of the source to the chain variables: in each chain the
/// auxiliaries before the first true original literal are true, the rest false.
TruthAssignment lift_assignment(const ReductionTrace& trace, const TruthAssignment& source_model);

/// Restricts a model of the split formula to the source variables, restoring
/// any values forced by unit propagation.
TruthAssignment project_assignment(const ReductionTrace& trace, const TruthAssignment& split_model);

// Bad pairs ---------------------------------------------------------------------------

/// Repeatedly resolves the first bad pair until none remain. Input must be a
/// valid 23SAT instance; the output is one too, and equisatisfiable.
Reduced<CnfFormula> eliminate_bad_pairs(const CnfFormula& f);

/// Turns a model of the bad-pair-free output back into a model of `input`.
/// Variables absent from the output are reset to false before the steps are
/// replayed newest first.
TruthAssignment backfill_assignment(const CnfFormula& input, const ReductionTrace& trace,
                                    const TruthAssignment& reduced_model);

/// Applies the formula-level steps of `trace` to `source`.
CnfFormula replay(const CnfFormula& source, const ReductionTrace& trace);
/// Applies the pendant steps of `trace` to `source`.
Graph replay(const Graph& source, const ReductionTrace& trace);

// Formula -> graph --------------------------------------------------------------------------

struct SatGraph {
  Graph graph;
  SatGraphMap map;
};

SatGraph build_g_i(const CnfFormula& f);

/// S = {u_i : t(x_i)} + {u_i' : not t(x_i)}, intersected with N_2(hub) so that
/// variables whose literal never occurs do not leave the second layer.
ShedComplementWitness assignment_to_witness(const SatGraph& gi, const TruthAssignment& t);

/// t(x_i) = 1 exactly when u_i is in S.
TruthAssignment witness_to_assignment(const SatGraph& gi, const ShedComplementWitness& s);

// SHED complement -> RE --------------------------------------------------------------------------

struct ReInstance {
  Graph graph;
  Edge edge;  ///< (x, y) with y the pendant
  ReductionTrace trace;
};

ReInstance shed_to_re(const Graph& g, Vertex x);

/// Extends S greedily (ascending, skipping N[x] and N[S]) to a maximal
/// independent set of G - x; in the pendant graph that set is a relating witness.
RelatingWitness shed_witness_to_re_witness(const Graph& g, Vertex x,
                                           const ShedComplementWitness& s);

/// S intersected with N_2(x), computed in the graph without the pendant y.
ShedComplementWitness re_witness_to_shed_witness(const Graph& g_prime, Edge edge,
                                                 const RelatingWitness& w);

// Full chain ---------------------------------------------------------------------------

struct PipelineArtifact {
  CnfFormula input;
  CnfFormula unit_free;
  CnfFormula sat23;
  CnfFormula bad_pair_free;
  SatGraph gi;
  ReInstance re;
  ReductionTrace units_trace;
  ReductionTrace split_trace;
  ReductionTrace elimination_trace;

  /// All steps in order: unit-prop, chain-split, bad-pair, pendant.
  ReductionTrace trace() const;
};

PipelineArtifact full_pipeline(const CnfFormula& f);

/// Model of the input -> relating witness for the final edge.
RelatingWitness forward_witness(const PipelineArtifact& a, const TruthAssignment& input_model);

/// Relating witness for the final edge -> model of the input.
TruthAssignment backward_assignment(const PipelineArtifact& a, const RelatingWitness& w);

}  // namespace relate
