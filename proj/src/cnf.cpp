#include "relate/cnf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "relate/error.hpp"

namespace relate {

Literal Literal::from_dimacs(int value) {
  if (value == 0) throw ContractViolation("literal 0 is the DIMACS clause terminator");
  return {value < 0 ? -value : value, value < 0};
}

std::ostream& operator<<(std::ostream& os, Literal l) {
  return os << (l.negated ? "~x" : "x") << l.variable;
}

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  if (literals_.empty()) throw ContractViolation("empty clause");
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
  for (std::size_t i = 0; i < literals_.size(); ++i) {
    if (literals_[i].variable < 1) throw ContractViolation("literal variable must be >= 1");
    if (i > 0 && literals_[i].variable == literals_[i - 1].variable) {
      throw ContractViolation("tautological clause on variable " +
                              std::to_string(literals_[i].variable));
    }
  }
}

namespace {
std::vector<Literal> to_literals(std::initializer_list<int> values) {
  std::vector<Literal> out;
  out.reserve(values.size());
  for (int v : values) out.push_back(Literal::from_dimacs(v));
  return out;
}
}  // namespace

Clause::Clause(std::initializer_list<int> dimacs_literals) : Clause(to_literals(dimacs_literals)) {}

bool Clause::contains(Literal l) const {
  return std::binary_search(literals_.begin(), literals_.end(), l);
}

bool Clause::mentions(int variable) const {
  return contains({variable, false}) || contains({variable, true});
}

CnfFormula::CnfFormula(int num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
  if (num_vars_ < 0) throw ContractViolation("negative variable count");
  for (const auto& c : clauses_) {
    for (Literal l : c) {
      if (l.variable > num_vars_) {
        throw ContractViolation("variable " + std::to_string(l.variable) + " exceeds num_vars " +
                                std::to_string(num_vars_));
      }
    }
  }
}

CnfFormula CnfFormula::from_dimacs_clauses(int num_vars,
                                           const std::vector<std::vector<int>>& clauses) {
  std::vector<Clause> out;
  out.reserve(clauses.size());
  for (const auto& c : clauses) {
    std::vector<Literal> lits;
    for (int v : c) lits.push_back(Literal::from_dimacs(v));
    out.emplace_back(std::move(lits));
  }
  return CnfFormula(num_vars, std::move(out));
}

const Clause& CnfFormula::clause(int index) const {
  if (index < 1 || index > static_cast<int>(clauses_.size())) {
    throw ContractViolation("clause index " + std::to_string(index) + " out of range");
  }
  return clauses_[index - 1];
}

TruthAssignment::TruthAssignment(int num_vars, bool fill) {
  if (num_vars < 0) throw ContractViolation("negative variable count");
  values_.assign(static_cast<std::size_t>(num_vars), fill);
}

TruthAssignment::TruthAssignment(std::initializer_list<int> bits) {
  for (int b : bits) values_.push_back(b != 0);
}

bool TruthAssignment::value(int variable) const {
  if (variable < 1 || variable > num_vars()) {
    throw ContractViolation("assignment has no value for variable " + std::to_string(variable));
  }
  return values_[static_cast<std::size_t>(variable - 1)];
}

void TruthAssignment::set(int variable, bool v) {
  if (variable < 1 || variable > num_vars()) {
    throw ContractViolation("assignment has no slot for variable " + std::to_string(variable));
  }
  values_[static_cast<std::size_t>(variable - 1)] = v;
}

std::ostream& operator<<(std::ostream& os, const TruthAssignment& t) {
  for (int v = 1; v <= t.num_vars(); ++v) {
    if (v > 1) os << ' ';
    os << (t.value(v) ? v : -v);
  }
  return os;
}

int LiteralClassification::count(Literal l) const {
  auto it = occurrence_count.find(l);
  return it == occurrence_count.end() ? 0 : it->second;
}

std::ostream& operator<<(std::ostream& os, const BadPair& p) {
  return os << '(' << p.clause_a << ", " << p.clause_b << ", " << p.lit_1 << ", " << p.lit_2
            << ')';
}

// DIMACS -------------------------------------------------------------------

namespace {

bool parse_int(std::string_view token, long long& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long num_vars = 0;
  long long num_clauses = 0;
  std::vector<Clause> clauses;
  std::vector<Literal> pending;

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0][0] == 'c') continue;
    if (tokens[0] == "p") {
      if (have_header) throw ParseError("duplicate problem line", line_no);
      if (tokens.size() != 4 || tokens[1] != "cnf" || !parse_int(tokens[2], num_vars) ||
          !parse_int(tokens[3], num_clauses) || num_vars < 0 || num_clauses < 0 ||
          num_vars > 100000000) {
        throw ParseError("malformed header, expected 'p cnf <vars> <clauses>'", line_no);
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("clause data before 'p cnf' header", line_no);
    for (auto tok : tokens) {
      long long value = 0;
      if (!parse_int(tok, value)) {
        throw ParseError("expected integer literal, got '" + std::string(tok) + "'", line_no);
      }
      if (value == 0) {
        if (pending.empty()) throw ParseError("empty clause", line_no);
        if (static_cast<long long>(clauses.size()) >= num_clauses) {
          throw ParseError("more clauses than declared in header", line_no);
        }
        std::sort(pending.begin(), pending.end());
        pending.erase(std::unique(pending.begin(), pending.end()), pending.end());
        for (std::size_t i = 1; i < pending.size(); ++i) {
          if (pending[i].variable == pending[i - 1].variable) {
            throw ParseError("tautological clause (x and -x) on variable " +
                                 std::to_string(pending[i].variable),
                             line_no);
          }
        }
        clauses.emplace_back(std::move(pending));
        pending.clear();
        continue;
      }
      long long var = value < 0 ? -value : value;
      if (var > num_vars) {
        throw ParseError("variable " + std::to_string(var) + " exceeds declared " +
                             std::to_string(num_vars),
                         line_no);
      }
      pending.push_back({static_cast<int>(var), value < 0});
    }
  }
  if (!have_header) throw ParseError("missing 'p cnf' header", line_no);
  if (!pending.empty()) throw ParseError("unterminated clause at end of input", line_no);
  if (static_cast<long long>(clauses.size()) != num_clauses) {
    throw ParseError("header declares " + std::to_string(num_clauses) + " clauses, found " +
                         std::to_string(clauses.size()),
                     line_no);
  }
  return CnfFormula(static_cast<int>(num_vars), std::move(clauses));
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

std::string emit_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
  for (const auto& c : f.clauses()) {
    for (Literal l : c) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

// Classification -------------------------------------------------------------

LiteralClassification classify_literals(const CnfFormula& f) {
  LiteralClassification out;
  for (const auto& c : f.clauses()) {
    for (Literal l : c) ++out.occurrence_count[l];
  }
  for (const auto& [lit, count] : out.occurrence_count) {
    if (count >= 2) out.major.insert(lit);
  }
  return out;
}

std::vector<BadPair> find_bad_pairs(const CnfFormula& f) {
  std::vector<BadPair> out;
  const auto& cs = f.clauses();
  for (std::size_t a = 0; a < cs.size(); ++a) {
    for (std::size_t b = a + 1; b < cs.size(); ++b) {
      // Literals of clause a whose negation lies in clause b, ascending by variable.
      std::vector<Literal> crossing;
      for (Literal l : cs[a]) {
        if (cs[b].contains(negate(l))) crossing.push_back(l);
      }
      for (std::size_t i = 0; i < crossing.size(); ++i) {
        for (std::size_t j = i + 1; j < crossing.size(); ++j) {
          out.push_back({static_cast<int>(a + 1), static_cast<int>(b + 1), crossing[i],
                         crossing[j]});
        }
      }
    }
  }
  return out;
}

Sat23Check is_23sat_instance(const CnfFormula& f) {
  const auto cls = classify_literals(f);
  for (std::size_t j = 0; j < f.num_clauses(); ++j) {
    const auto& c = f.clauses()[j];
    if (c.size() < 2 || c.size() > 3) {
      return {false, "clause " + std::to_string(j + 1) + " has " + std::to_string(c.size()) +
                         " literals (need 2 or 3)"};
    }
    int majors = 0;
    for (Literal l : c) majors += cls.is_major(l) ? 1 : 0;
    if (majors > 1) {
      return {false, "clause " + std::to_string(j + 1) + " contains " + std::to_string(majors) +
                         " major literals"};
    }
  }
  return {};
}

bool evaluate(const CnfFormula& f, const TruthAssignment& t) {
  if (t.num_vars() < f.num_vars()) {
    throw ContractViolation("assignment covers " + std::to_string(t.num_vars()) +
                            " variables, formula has " + std::to_string(f.num_vars()));
  }
  return std::all_of(f.clauses().begin(), f.clauses().end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](Literal l) { return t.value(l); });
  });
}

}  // namespace relate
