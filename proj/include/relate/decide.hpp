#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "relate/graph.hpp"

namespace relate {

inline constexpr std::uint64_t kDefaultSubsetCap = std::uint64_t{1} << 20;

/// Independent S with S + x and S + y both maximal independent.
struct RelatingWitness {
  VertexSet set_s;
  bool operator==(const RelatingWitness&) const = default;
};

/// Independent S inside N_2(v) that dominates N(v): proof that v is not shedding.
struct ShedComplementWitness {
  VertexSet set_s;
  bool operator==(const ShedComplementWitness&) const = default;
};

struct RelatingDecision {
  bool relating = false;
  std::optional<RelatingWitness> witness;
  std::uint64_t nodes = 0;
};

struct SheddingDecision {
  bool shedding = false;
  /// Present exactly when the vertex is not shedding.
  std::optional<ShedComplementWitness> witness;
  std::uint64_t nodes = 0;
};

/// Smallest independent S within `candidates` dominating `targets`; among
/// equal sizes the lexicographically least. The search is split over the
/// connected pieces of the candidate/target interaction graph and counts one
/// node per partial set visited; more than `cap` nodes throws ResourceError.
std::optional<VertexSet> find_independent_dominator(const Graph& g, const VertexSet& candidates,
                                                    const VertexSet& targets, std::uint64_t cap,
                                                    std::uint64_t* nodes = nullptr);

/// Exact decision for the edge xy. Candidates are restricted to
/// V minus (N[x] union N[y]), which any witness must avoid.
RelatingDecision is_relating(const Graph& g, Vertex x, Vertex y,
                             std::uint64_t cap = kDefaultSubsetCap);

/// Exact decision via the N_2(v) / N(v) characterization. An isolated vertex is
/// not shedding (the empty set dominates the empty neighborhood).
SheddingDecision is_shedding(const Graph& g, Vertex v, std::uint64_t cap = kDefaultSubsetCap);

/// W2 membership through the all-vertices-shedding characterization, valid for
/// graphs without isolated vertices (others are rejected).
bool is_w2_desk(const Graph& g, std::uint64_t cap = kDefaultSubsetCap,
                std::uint64_t mis_cap = kDefaultMisCap);

bool is_valid_relating_witness(const Graph& g, Vertex x, Vertex y, const RelatingWitness& w);
bool is_valid_shed_witness(const Graph& g, Vertex v, const ShedComplementWitness& w);

/// Outcome of checking "xy relating iff neither endpoint is shedding" on one
/// edge of a graph free of C4, C5 and C6 with N(x), N(y) disjoint and both
/// degrees at least 2.
struct ShedRelateReport {
  bool hypotheses_met = false;
  std::string unmet;  ///< first failing hypothesis, empty when met
  bool relating = false;
  bool x_shedding = false;
  bool y_shedding = false;
  /// True when hypotheses fail (nothing asserted) or the equivalence holds.
  bool consistent = true;
};

ShedRelateReport crosscheck_shed_relating(const Graph& g, Vertex x, Vertex y,
                                          std::uint64_t cap = kDefaultSubsetCap);

}  // namespace relate
