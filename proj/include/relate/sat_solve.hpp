#pragma once

#include <cstdint>
#include <optional>

#include "relate/cnf.hpp"

namespace relate {

struct SolveStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
};

struct SolveResult {
  bool satisfiable = false;
  std::optional<TruthAssignment> model;
  SolveStats stats;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;
inline constexpr int kBruteForceMaxVars = 24;

/// DPLL with unit propagation. Branches on the lowest unassigned variable,
/// true first; unconstrained variables end up false. Throws ResourceError
/// once more than `node_budget` search nodes have been opened.
SolveResult solve(const CnfFormula& f, std::uint64_t node_budget = kDefaultNodeBudget);

/// Enumerates assignments in binary counting order (variable 1 is the low
/// bit) and returns the first model. Throws ResourceError above 24 variables.
SolveResult solve_brute(const CnfFormula& f);

}  // namespace relate
