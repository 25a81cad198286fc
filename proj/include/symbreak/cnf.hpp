// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symbreak {

/// A literal over variables 1..n, packed so that the positive literal of
/// variable v has code 2*(v-1) and the negative literal code 2*(v-1)+1.
/// The code order doubles as the normalized literal order: ascending by
/// variable, positive before negative within a variable.
class Lit {
 public:
  Lit() = default;

  static Lit positive(int var) { return Lit(2 * (var - 1)); }
  static Lit negative(int var) { return Lit(2 * (var - 1) + 1); }

  static Lit from_code(int code) {
    if (code < 0) throw std::invalid_argument("literal code must be non-negative");
    return Lit(code);
  }

  /// DIMACS convention: k > 0 is the positive literal of variable k,
  /// k < 0 the negative literal of variable -k.
  static Lit from_dimacs(int value) {
    if (value == 0) throw std::invalid_argument("0 is not a DIMACS literal");
    return value > 0 ? positive(value) : negative(-value);
  }

  int var() const { return code_ / 2 + 1; }
  bool is_positive() const { return (code_ & 1) == 0; }
  Lit negated() const { return Lit(code_ ^ 1); }
  int code() const { return code_; }
  int to_dimacs() const { return is_positive() ? var() : -var(); }

  friend auto operator<=>(const Lit&, const Lit&) = default;

 private:
  explicit Lit(int code) : code_(code) {}
  int code_ = 0;
};

inline std::string to_string(Lit l) {
  return (l.is_positive() ? "x" : "~x") + std::to_string(l.var());
}

/// A disjunction of literals, stored sorted with duplicate literals removed.
/// Tautological clauses (containing both l and ~l) are legal and kept as-is;
/// no simplification happens here.
class Clause {
 public:
  explicit Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
    if (lits_.empty()) throw std::invalid_argument("clause must be nonempty");
    std::sort(lits_.begin(), lits_.end());
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
  }

  Clause(std::initializer_list<int> dimacs_lits) : Clause(from_dimacs_list(dimacs_lits)) {}

  const std::vector<Lit>& lits() const { return lits_; }
  int size() const { return static_cast<int>(lits_.size()); }

  bool contains(Lit l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
  }

  bool is_tautology() const {
    for (Lit l : lits_)
      if (l.is_positive() && contains(l.negated())) return true;
    return false;
  }

  int max_var() const { return lits_.back().var(); }

  friend auto operator<=>(const Clause&, const Clause&) = default;

 private:
  static std::vector<Lit> from_dimacs_list(std::initializer_list<int> values) {
    std::vector<Lit> lits;
    lits.reserve(values.size());
    for (int v : values) lits.push_back(Lit::from_dimacs(v));
    return lits;
  }

  std::vector<Lit> lits_;
};

/// A CNF formula: a variable count plus an ordered list of clauses.
/// Clause order is part of the value and survives a parse/write round trip.
class CnfFormula {
 public:
  CnfFormula(int num_vars, std::vector<Clause> clauses)
      : num_vars_(num_vars), clauses_(std::move(clauses)) {
    if (num_vars_ < 1) throw std::invalid_argument("formula needs at least one variable");
    for (const Clause& c : clauses_)
      if (c.max_var() > num_vars_)
        throw std::invalid_argument("clause references variable beyond num_vars");
  }

  int num_vars() const { return num_vars_; }
  int num_clauses() const { return static_cast<int>(clauses_.size()); }
  const std::vector<Clause>& clauses() const { return clauses_; }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  int num_vars_;
  std::vector<Clause> clauses_;
};

/// A total truth assignment over variables 1..n.
class Assignment {
 public:
  explicit Assignment(int num_vars) : bits_(num_vars, false) {}

  /// Builds the assignment at position `index` in the truth-table order:
  /// X1 is the most significant bit and 0 sorts before 1.
  static Assignment from_index(int num_vars, std::uint64_t index) {
    Assignment a(num_vars);
    for (int v = 1; v <= num_vars; ++v)
      a.set(v, (index >> (num_vars - v)) & 1);
    return a;
  }

  int num_vars() const { return static_cast<int>(bits_.size()); }

  bool value(int var) const { return bits_.at(var - 1); }
  bool value(Lit l) const { return l.is_positive() ? value(l.var()) : !value(l.var()); }
  void set(int var, bool v) { bits_.at(var - 1) = v; }

  /// Inverse of from_index.
  std::uint64_t index() const {
    std::uint64_t idx = 0;
    for (bool b : bits_) idx = (idx << 1) | (b ? 1 : 0);
    return idx;
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;

 private:
  std::vector<bool> bits_;
};

/// Error raised by the DIMACS parser, carrying the offending line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Parses DIMACS CNF: optional `c` comment lines, one `p cnf <n> <m>` header,
/// then m clauses given as nonzero integers terminated by 0. Clauses may span
/// lines. Comment lines are accepted anywhere and skipped.
inline CnfFormula parse_dimacs(std::istream& in) {
  int line_no = 0;
  int num_vars = -1;
  long declared_clauses = -1;
  std::vector<Clause> clauses;
  std::vector<Lit> current;
  bool in_clause = false;
  int clause_start_line = 0;

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::string tok;
    if (!(tokens >> tok)) continue;  // blank line
    if (tok == "c" || tok[0] == 'c') continue;

    if (tok == "p") {
      if (num_vars >= 0) throw ParseError(line_no, "duplicate problem header");
      std::string kind;
      long n = 0, m = 0;
      std::string extra;
      constexpr long kMaxHeaderCount = 100000000;
      if (!(tokens >> kind >> n >> m) || kind != "cnf" || (tokens >> extra) || n < 1 ||
          n > kMaxHeaderCount || m < 0 || m > kMaxHeaderCount)
        throw ParseError(line_no, "malformed header (expected 'p cnf <vars> <clauses>')");
      num_vars = static_cast<int>(n);
      declared_clauses = m;
      continue;
    }

    if (num_vars < 0) throw ParseError(line_no, "clause data before 'p cnf' header");

    // Clause tokens; reparse the whole line as integers.
    std::istringstream ints(line);
    long value;
    while (ints >> value) {
      if (value == 0) {
        if (current.empty())
          throw ParseError(line_no, "zero-length clause");
        if (static_cast<long>(clauses.size()) == declared_clauses)
          throw ParseError(line_no, "clause count mismatch: more clauses than declared");
        clauses.emplace_back(std::move(current));
        current.clear();
        in_clause = false;
      } else {
        long var = value > 0 ? value : -value;
        if (var > num_vars)
          throw ParseError(line_no, "variable index " + std::to_string(var) +
                                        " exceeds declared " + std::to_string(num_vars));
        if (!in_clause) {
          in_clause = true;
          clause_start_line = line_no;
        }
        current.push_back(Lit::from_dimacs(static_cast<int>(value)));
      }
    }
    if (!ints.eof())
      throw ParseError(line_no, "invalid token in clause data");
  }

  if (num_vars < 0) throw ParseError(line_no, "missing 'p cnf' header");
  if (in_clause)
    throw ParseError(clause_start_line, "unterminated clause (missing trailing 0)");
  if (static_cast<long>(clauses.size()) != declared_clauses)
    throw ParseError(line_no, "clause count mismatch: declared " +
                                  std::to_string(declared_clauses) + ", found " +
                                  std::to_string(clauses.size()));
  return CnfFormula(num_vars, std::move(clauses));
}

inline CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

/// Writes DIMACS with literals in normalized order (ascending by variable,
/// positive before negative) and the clause list order preserved. Comments
/// are never emitted; lines end with LF.
inline void write_dimacs(const CnfFormula& f, std::ostream& out) {
  out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
  for (const Clause& c : f.clauses()) {
    for (Lit l : c.lits()) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
}

inline std::string write_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  write_dimacs(f, out);
  return out.str();
}

/// True iff every clause contains at least one literal satisfied by `a`.
inline bool evaluate(const CnfFormula& f, const Assignment& a) {
  if (a.num_vars() != f.num_vars())
    throw std::invalid_argument("assignment must cover exactly the formula's variables");
  for (const Clause& c : f.clauses()) {
    bool satisfied = false;
    for (Lit l : c.lits())
      if (a.value(l)) {
        satisfied = true;
        break;
      }
    if (!satisfied) return false;
  }
  return true;
}

inline constexpr int kTruthTableMaxVars = 20;

/// All 2^n rows in lexicographic assignment order (X1 most significant,
/// 0 before 1), each paired with the evaluation result.
inline std::vector<std::pair<Assignment, bool>> truth_table(const CnfFormula& f) {
  if (f.num_vars() > kTruthTableMaxVars)
    throw std::domain_error("truth_table limited to " + std::to_string(kTruthTableMaxVars) +
                            " variables");
  std::vector<std::pair<Assignment, bool>> rows;
  const std::uint64_t count = std::uint64_t{1} << f.num_vars();
  rows.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    Assignment a = Assignment::from_index(f.num_vars(), i);
    bool v = evaluate(f, a);
    rows.emplace_back(std::move(a), v);
  }
  return rows;
}

}  // namespace symbreak
