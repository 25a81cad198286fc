// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "symbreak/cnf.hpp"
#include "symbreak/sbp.hpp"

namespace symbreak {

struct TrailEntry {
  int var;
  bool value;
  bool is_decision;  // false for propagated assignments
};

/// Mutable assignment state of the backtracking search. Popping the trail
/// restores the previous state exactly.
class PartialAssignment {
 public:
  enum class Value : unsigned char { unassigned, assigned_false, assigned_true };

  explicit PartialAssignment(int num_vars) : values_(num_vars + 1, Value::unassigned) {}

  int num_vars() const { return static_cast<int>(values_.size()) - 1; }

  bool is_assigned(int var) const { return values_.at(var) != Value::unassigned; }

  bool value(int var) const {
    if (!is_assigned(var)) throw std::logic_error("variable is unassigned");
    return values_[var] == Value::assigned_true;
  }

  bool literal_true(Lit l) const {
    return is_assigned(l.var()) && value(l.var()) == l.is_positive();
  }
  bool literal_false(Lit l) const {
    return is_assigned(l.var()) && value(l.var()) != l.is_positive();
  }

  void assign(int var, bool value, bool is_decision) {
    if (is_assigned(var)) throw std::logic_error("variable is already assigned");
    values_[var] = value ? Value::assigned_true : Value::assigned_false;
    trail_.push_back({var, value, is_decision});
  }

  std::size_t trail_size() const { return trail_.size(); }
  const std::vector<TrailEntry>& trail() const { return trail_; }

  void pop_to(std::size_t mark) {
    while (trail_.size() > mark) {
      values_[trail_.back().var] = Value::unassigned;
      trail_.pop_back();
    }
  }

  bool is_total() const { return trail_.size() == static_cast<std::size_t>(num_vars()); }

  /// First unassigned variable in natural order, or 0 when total.
  int first_unassigned() const {
    for (int v = 1; v <= num_vars(); ++v)
      if (!is_assigned(v)) return v;
    return 0;
  }

  Assignment to_assignment() const {
    if (!is_total()) throw std::logic_error("assignment is not total");
    Assignment a(num_vars());
    for (int v = 1; v <= num_vars(); ++v) a.set(v, value(v));
    return a;
  }

 private:
  std::vector<Value> values_;
  std::vector<TrailEntry> trail_;
};

struct SearchStats {
  std::int64_t decisions = 0;
  std::int64_t propagations = 0;
  std::int64_t conflicts = 0;
  std::int64_t leaves_visited = 0;
};

enum class Status { sat, unsat };

struct SolveResult {
  Status status = Status::unsat;
  std::optional<Assignment> model;
  SearchStats stats;
};

enum class Propagation { fixpoint, conflict };

/// Repeatedly assigns the sole unassigned literal of any clause whose other
/// literals are all false, until fixpoint or some clause has every literal
/// false (a conflict). A conflict is an outcome, not an error.
inline Propagation unit_propagate(const CnfFormula& f, PartialAssignment& a,
                                  SearchStats& stats) {
  bool again = true;
  while (again) {
    again = false;
    for (const Clause& c : f.clauses()) {
      bool satisfied = false;
      int unassigned = 0;
      Lit unit;
      for (Lit l : c.lits()) {
        if (a.literal_true(l)) {
          satisfied = true;
          break;
        }
        if (!a.is_assigned(l.var())) {
          ++unassigned;
          unit = l;
        }
      }
      if (satisfied) continue;
      if (unassigned == 0) return Propagation::conflict;
      if (unassigned == 1) {
        a.assign(unit.var(), unit.is_positive(), /*is_decision=*/false);
        ++stats.propagations;
        again = true;
      }
    }
  }
  return Propagation::fixpoint;
}

namespace detail {

/// Chronological DPLL: static decision order X1..Xn, value 0 before 1.
/// Returns true when the search stopped early at a model (first-model mode).
struct DpllSearch {
  DpllSearch(const CnfFormula& formula, PartialAssignment& assignment, SearchStats& shared_stats,
             bool stop_at_first = true)
      : f(formula), pa(assignment), stats(shared_stats), stop_at_first(stop_at_first) {}

  const CnfFormula& f;
  PartialAssignment& pa;
  SearchStats& stats;
  bool stop_at_first;
  std::int64_t models = 0;
  std::optional<Assignment> first_model;

  bool run() {
    if (unit_propagate(f, pa, stats) == Propagation::conflict) {
      ++stats.conflicts;
      return false;
    }
    return descend();
  }

  bool descend() {
    const int var = pa.first_unassigned();
    if (var == 0) {
      ++stats.leaves_visited;
      ++models;
      if (!first_model) first_model = pa.to_assignment();
      return stop_at_first;
    }
    for (bool value : {false, true}) {
      const std::size_t mark = pa.trail_size();
      ++stats.decisions;
      pa.assign(var, value, /*is_decision=*/true);
      if (unit_propagate(f, pa, stats) == Propagation::fixpoint) {
        if (descend()) return true;
      } else {
        ++stats.conflicts;
      }
      pa.pop_to(mark);
    }
    return false;
  }
};

}  // namespace detail

/// DPLL with unit propagation and chronological backtracking. Deterministic:
/// the first model in decision order is returned when satisfiable.
inline SolveResult solve(const CnfFormula& f) {
  SolveResult result;
  PartialAssignment pa(f.num_vars());
  detail::DpllSearch search(f, pa, result.stats);
  if (search.run()) {
    result.status = Status::sat;
    result.model = std::move(search.first_model);
  } else {
    result.status = Status::unsat;
  }
  return result;
}

struct EnumerationResult {
  std::int64_t model_count = 0;
  SearchStats stats;
};

/// Exhausts the whole search tree, visiting every total model.
inline EnumerationResult enumerate_models(const CnfFormula& f) {
  EnumerationResult result;
  PartialAssignment pa(f.num_vars());
  detail::DpllSearch search(f, pa, result.stats, /*stop_at_first=*/false);
  search.run();
  result.model_count = search.models;
  return result;
}

inline constexpr int kCountMaxVars = 20;

/// Number of total assignments of `over` that extend to a model of f. For
/// SBP-augmented formulas pass the original variables, so auxiliary
/// variables do not inflate the count.
inline std::int64_t count_models(const CnfFormula& f, const std::vector<int>& over) {
  if (static_cast<int>(over.size()) > kCountMaxVars)
    throw std::domain_error("count_models limited to " + std::to_string(kCountMaxVars) +
                            " projected variables");
  std::vector<bool> seen(f.num_vars() + 1, false);
  for (int v : over) {
    if (v < 1 || v > f.num_vars())
      throw std::invalid_argument("projected variable outside the formula");
    if (seen[v]) throw std::invalid_argument("duplicate projected variable");
    seen[v] = true;
  }
  std::int64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << over.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    PartialAssignment pa(f.num_vars());
    SearchStats scratch;
    for (std::size_t k = 0; k < over.size(); ++k)
      pa.assign(over[k], (mask >> k) & 1, /*is_decision=*/false);
    detail::DpllSearch search(f, pa, scratch);
    if (search.run()) ++count;
  }
  return count;
}

/// With no SBP clauses every one of the 2^n assignments is examined.
inline std::int64_t explored_assignment_count(const CnfFormula& f) {
  if (f.num_vars() > kCountMaxVars)
    throw std::domain_error("explored_assignment_count limited to " +
                            std::to_string(kCountMaxVars) + " variables");
  return std::int64_t{1} << f.num_vars();
}

/// Assignments over the original variables that survive the SBP clauses
/// alone: 2^n minus those falsifying some SBP clause. Clauses touching
/// auxiliary variables never prune at the truth-table level.
inline std::int64_t explored_assignment_count(const CnfFormula& f, const SbpClauses& sbp) {
  const int n = f.num_vars();
  if (n > kCountMaxVars)
    throw std::domain_error("explored_assignment_count limited to " +
                            std::to_string(kCountMaxVars) + " variables");
  std::vector<const Clause*> relevant;
  for (const Clause& c : sbp.clauses)
    if (c.max_var() <= n) relevant.push_back(&c);
  std::int64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    bool survives = true;
    for (const Clause* c : relevant) {
      bool satisfied = false;
      for (Lit l : c->lits()) {
        const bool var_value = (idx >> (n - l.var())) & 1;
        if (var_value == l.is_positive()) {
          satisfied = true;
          break;
        }
      }
      if (!satisfied) {
        survives = false;
        break;
      }
    }
    if (survives) ++count;
  }
  return count;
}

struct CompareReport {
  SolveResult base;
  SolveResult augmented;
  std::int64_t base_models = 0;
  std::int64_t augmented_models = 0;
  std::int64_t base_explored = 0;
  std::int64_t augmented_explored = 0;
  bool status_equal = false;
};

/// Runs the solver and the projected model count on f and on conjoin(f, sbp)
/// and reports both sides plus the truth-table level pruning numbers.
inline CompareReport compare_runs(const CnfFormula& f, const SbpClauses& sbp) {
  CompareReport report;
  const CnfFormula augmented = conjoin(f, sbp);
  report.base = solve(f);
  report.augmented = solve(augmented);
  std::vector<int> over(f.num_vars());
  std::iota(over.begin(), over.end(), 1);
  report.base_models = count_models(f, over);
  report.augmented_models = count_models(augmented, over);
  report.base_explored = explored_assignment_count(f);
  report.augmented_explored = explored_assignment_count(f, sbp);
  report.status_equal = report.base.status == report.augmented.status;
  return report;
}

}  // namespace symbreak
