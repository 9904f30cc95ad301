#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace relate {

/// A variable (1-based) with a polarity. Orders by variable, positive first.
struct Literal {
  int variable = 1;
  bool negated = false;

  static Literal from_dimacs(int value);
  int to_dimacs() const { return negated ? -variable : variable; }

  auto operator<=>(const Literal&) const = default;
};

inline Literal negate(Literal l) { return {l.variable, !l.negated}; }

std::ostream& operator<<(std::ostream& os, Literal l);

/// A nonempty set of literals with at most one literal per variable.
/// Stored sorted; exact duplicates are collapsed on construction.
class Clause {
 public:
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<int> dimacs_literals);

  std::span<const Literal> literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool contains(Literal l) const;
  bool mentions(int variable) const;

  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }

  bool operator==(const Clause&) const = default;

 private:
  std::vector<Literal> literals_;
};

/// An ordered clause list over variables 1..num_vars.
class CnfFormula {
 public:
  CnfFormula() = default;
  CnfFormula(int num_vars, std::vector<Clause> clauses);

  /// Convenience for literal-heavy call sites: clauses in DIMACS integer form.
  static CnfFormula from_dimacs_clauses(int num_vars,
                                        const std::vector<std::vector<int>>& clauses);

  int num_vars() const { return num_vars_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t num_clauses() const { return clauses_.size(); }
  /// 1-based access, matching clause numbering in traces and bad pairs.
  const Clause& clause(int index) const;

  bool operator==(const CnfFormula&) const = default;

 private:
  int num_vars_ = 0;
  std::vector<Clause> clauses_;
};

/// Total assignment to variables 1..num_vars.
class TruthAssignment {
 public:
  TruthAssignment() = default;
  explicit TruthAssignment(int num_vars, bool fill = false);
  TruthAssignment(std::initializer_list<int> bits);

  int num_vars() const { return static_cast<int>(values_.size()); }
  bool value(int variable) const;
  bool value(Literal l) const { return value(l.variable) != l.negated; }
  void set(int variable, bool v);
  /// Sets the literal's variable so that the literal evaluates to `v`.
  void set(Literal l, bool v) { set(l.variable, v != l.negated); }

  bool operator==(const TruthAssignment&) const = default;

 private:
  std::vector<bool> values_;
};

std::ostream& operator<<(std::ostream& os, const TruthAssignment& t);

struct LiteralClassification {
  std::map<Literal, int> occurrence_count;
  std::set<Literal> major;

  int count(Literal l) const;
  bool is_major(Literal l) const { return major.contains(l); }
};

/// Clauses `clause_a` < `clause_b` (1-based) with {lit_1, lit_2} in clause_a and
/// their negations in clause_b; lit_1.variable < lit_2.variable.
struct BadPair {
  int clause_a = 0;
  int clause_b = 0;
  Literal lit_1;
  Literal lit_2;

  bool operator==(const BadPair&) const = default;
};

std::ostream& operator<<(std::ostream& os, const BadPair& p);

struct Sat23Check {
  bool valid = true;
  std::string violation;
  explicit operator bool() const { return valid; }
};

CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(std::string_view text);
std::string emit_dimacs(const CnfFormula& f);

LiteralClassification classify_literals(const CnfFormula& f);
std::vector<BadPair> find_bad_pairs(const CnfFormula& f);
Sat23Check is_23sat_instance(const CnfFormula& f);

/// Throws ContractViolation when `t` covers fewer variables than `f`.
bool evaluate(const CnfFormula& f, const TruthAssignment& t);

}  // namespace relate
