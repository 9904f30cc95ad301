#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "relate/cnf.hpp"
#include "relate/graph.hpp"

namespace relate {

/// Seeded 64-bit generator. Bounded draws avoid std distributions so streams
/// are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi);
  bool coin() { return (next() >> 63) != 0; }

  /// Independent stream for instance `index`, stable under reordering of draws
  /// from the parent.
  static Rng for_instance(std::uint64_t seed, std::uint64_t index);

 private:
  std::mt19937_64 engine_;
};

/// Clause sizes uniform in [min_size, max_size] (capped at num_vars), distinct
/// variables per clause, random polarity.
CnfFormula random_formula(Rng& rng, int num_vars, int num_clauses, int min_size, int max_size);

/// Valid 23SAT instance built so that each clause holds at most one literal
/// that may repeat; the remaining literals are used exactly once. Generation
/// stops early when fresh literals run out.
CnfFormula random_23sat(Rng& rng, int num_vars, int num_clauses);

/// G(n, m) built edge by edge; a candidate edge closing a cycle whose length is
/// listed in `forbidden` is rejected, and a saturated graph is discarded and
/// rebuilt. Throws ResourceError after `retry_cap` rejected candidates.
Graph random_graph(Rng& rng, int num_vertices, int num_edges, const std::vector<int>& forbidden,
                   int retry_cap = 10000);

}  // namespace relate
