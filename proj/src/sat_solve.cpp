#include "relate/sat_solve.hpp"

#include <string>
#include <vector>

#include "relate/error.hpp"

namespace relate {

namespace {

// Values: 0 unassigned, 1 true, -1 false.
class Dpll {
 public:
  Dpll(const CnfFormula& f, std::uint64_t budget)
      : f_(f), budget_(budget), value_(static_cast<std::size_t>(f.num_vars()) + 1, 0) {}

  SolveResult run() {
    SolveResult result;
    result.satisfiable = search();
    result.stats = stats_;
    if (result.satisfiable) {
      TruthAssignment model(f_.num_vars());
      for (int v = 1; v <= f_.num_vars(); ++v) model.set(v, value_[v] > 0);
      result.model = std::move(model);
    }
    return result;
  }

 private:
  int lit_value(Literal l) const {
    int v = value_[l.variable];
    return l.negated ? -v : v;
  }

  void assign(Literal l, std::vector<int>& trail) {
    value_[l.variable] = l.negated ? -1 : 1;
    trail.push_back(l.variable);
  }

  // Returns false on conflict.
  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : f_.clauses()) {
        int unassigned = 0;
        Literal last{};
        bool satisfied = false;
        for (Literal l : c) {
          int lv = lit_value(l);
          if (lv > 0) {
            satisfied = true;
            break;
          }
          if (lv == 0) {
            ++unassigned;
            last = l;
          }
        }
        if (satisfied) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          assign(last, trail);
          ++stats_.propagations;
          changed = true;
        }
      }
    }
    return true;
  }

  void undo(const std::vector<int>& trail) {
    for (int v : trail) value_[v] = 0;
  }

  bool search() {
    if (++nodes_ > budget_) {
      throw ResourceError("DPLL node budget of " + std::to_string(budget_) + " exceeded");
    }
    std::vector<int> trail;
    if (!propagate(trail)) {
      undo(trail);
      return false;
    }
    int branch = 0;
    for (const auto& c : f_.clauses()) {
      bool satisfied = false;
      for (Literal l : c) satisfied = satisfied || lit_value(l) > 0;
      if (satisfied) continue;
      for (Literal l : c) {
        if (lit_value(l) == 0 && (branch == 0 || l.variable < branch)) branch = l.variable;
      }
    }
    if (branch == 0) return true;  // every clause satisfied
    for (bool phase : {true, false}) {
      ++stats_.decisions;
      std::vector<int> local;
      assign({branch, !phase}, local);
      if (search()) return true;
      undo(local);
    }
    undo(trail);
    return false;
  }

  const CnfFormula& f_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> value_;
  SolveStats stats_;
};

}  // namespace

SolveResult solve(const CnfFormula& f, std::uint64_t node_budget) {
  if (node_budget == 0) throw ContractViolation("node budget must be positive");
  return Dpll(f, node_budget).run();
}

SolveResult solve_brute(const CnfFormula& f) {
  const int n = f.num_vars();
  if (n > kBruteForceMaxVars) {
    throw ResourceError("brute-force solver limited to " + std::to_string(kBruteForceMaxVars) +
                        " variables, got " + std::to_string(n));
  }
  // Each clause as (positive mask, negative mask).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> masks;
  for (const auto& c : f.clauses()) {
    std::uint32_t pos = 0, neg = 0;
    for (Literal l : c) (l.negated ? neg : pos) |= 1u << (l.variable - 1);
    masks.emplace_back(pos, neg);
  }
  SolveResult result;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    auto x = static_cast<std::uint32_t>(bits);
    bool ok = true;
    for (auto [pos, neg] : masks) {
      if ((x & pos) == 0 && (~x & neg) == 0) {
        ok = false;
        break;
      }
    }
    ++result.stats.decisions;
    if (ok) {
      TruthAssignment model(n);
      for (int v = 1; v <= n; ++v) model.set(v, (x >> (v - 1)) & 1u);
      result.satisfiable = true;
      result.model = std::move(model);
      return result;
    }
  }
  return result;
}

}  // namespace relate
