// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "symbreak/automorphism.hpp"
#include "symbreak/cnf.hpp"
#include "symbreak/permutation.hpp"
#include "symbreak/predicate.hpp"

namespace symbreak {

enum class SbpMethod { lex_leader, pairwise };

/// CNF form of a symmetry breaking predicate. Auxiliary variables, when any
/// are introduced, occupy indices num_base_vars+1 .. num_base_vars+num_aux_vars.
struct SbpClauses {
  std::vector<Clause> clauses;
  int num_aux_vars = 0;
  SbpMethod method = SbpMethod::lex_leader;
  int num_base_vars = 0;

  bool empty() const { return clauses.empty() && num_aux_vars == 0; }
};

/// The pairwise construction only handles generators that are products of
/// variable transpositions; anything else is rejected with this error.
class PairwiseInapplicableError : public std::runtime_error {
 public:
  explicit PairwiseInapplicableError(const std::string& message)
      : std::runtime_error(message) {}
};

/// BP(p, i) = [and_{j<i} (x_j = x_j^p)] -> (x_i <= x_i^p), built raw, with no
/// simplification. x^p is the image of the positive literal of x; a negative
/// image makes the atom reference the complemented variable.
inline PredPtr bit_predicate(const LiteralPermutation& p, int i, int n) {
  if (p.num_vars() != n)
    throw std::invalid_argument("permutation arity does not match variable count");
  if (i < 1 || i > n) throw std::out_of_range("bit predicate index out of range");
  PredPtr consequent = Pred::ordering(Lit::positive(i), p.image_of(Lit::positive(i)));
  if (i == 1) return consequent;
  std::vector<PredPtr> antecedent;
  antecedent.reserve(i - 1);
  for (int j = 1; j < i; ++j)
    antecedent.push_back(Pred::biconditional(Lit::positive(j), p.image_of(Lit::positive(j))));
  return Pred::implication(Pred::conjunction(std::move(antecedent)), consequent);
}

namespace detail {

/// Equivalence-preserving constant folding: constants are absorbed, nested
/// conjunctions/disjunctions flattened, trivial atoms (a = a, a <= a)
/// collapsed. Never changes the formula's models.
inline PredPtr fold(const PredPtr& p) {
  switch (p->kind()) {
    case Pred::Kind::constant:
    case Pred::Kind::literal:
      return p;
    case Pred::Kind::negation: {
      PredPtr arg = fold(p->args()[0]);
      if (arg->kind() == Pred::Kind::constant) return Pred::constant(!arg->constant_value());
      if (arg->kind() == Pred::Kind::negation) return arg->args()[0];
      return Pred::negation(arg);
    }
    case Pred::Kind::conjunction:
    case Pred::Kind::disjunction: {
      const bool is_and = p->kind() == Pred::Kind::conjunction;
      std::vector<PredPtr> args;
      for (const PredPtr& raw : p->args()) {
        PredPtr arg = fold(raw);
        if (arg->kind() == Pred::Kind::constant) {
          if (arg->constant_value() == is_and) continue;        // neutral element
          return Pred::constant(!is_and);                       // absorbing element
        }
        if (arg->kind() == p->kind())
          args.insert(args.end(), arg->args().begin(), arg->args().end());
        else
          args.push_back(arg);
      }
      return is_and ? Pred::conjunction(std::move(args)) : Pred::disjunction(std::move(args));
    }
    case Pred::Kind::implication: {
      PredPtr a = fold(p->args()[0]);
      PredPtr b = fold(p->args()[1]);
      if (a->kind() == Pred::Kind::constant)
        return a->constant_value() ? b : Pred::constant(true);
      if (b->kind() == Pred::Kind::constant)
        return b->constant_value() ? Pred::constant(true) : fold(Pred::negation(a));
      return Pred::implication(a, b);
    }
    case Pred::Kind::biconditional:
      if (p->lhs() == p->rhs()) return Pred::constant(true);
      if (p->lhs() == p->rhs().negated()) return Pred::constant(false);
      return p;
    case Pred::Kind::ordering:
      if (p->lhs() == p->rhs()) return Pred::constant(true);
      return p;
  }
  throw std::logic_error("unreachable predicate kind");
}

inline bool is_tautology_exhaustive(const PredPtr& p, const std::vector<int>& vars) {
  const int max_var = vars.empty() ? 1 : vars.back();
  Assignment a(max_var);
  const std::uint64_t count = std::uint64_t{1} << vars.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (std::size_t k = 0; k < vars.size(); ++k) a.set(vars[k], (mask >> k) & 1);
    if (!evaluate(p, a)) return false;
  }
  return true;
}

inline std::vector<PredPtr> top_level_conjuncts(const PredPtr& p) {
  if (p->kind() == Pred::Kind::conjunction) return p->args();
  return {p};
}

}  // namespace detail

inline constexpr int kSimplifyMaxVars = 16;

struct SimplifyResult {
  PredPtr formula;
  bool guard_exceeded = false;
};

/// Semantic simplification of a conjunction of bit predicates: constants are
/// folded, then any conjunct that is a tautology — which covers both bits the
/// permutation fixes and bits whose cycle has already closed — is verified by
/// exhaustive evaluation over its own variables and dropped. Conjuncts over
/// more than kSimplifyMaxVars variables are kept untouched and flagged.
inline SimplifyResult simplify(const PredPtr& input) {
  SimplifyResult result;
  PredPtr folded = detail::fold(input);
  if (folded->kind() == Pred::Kind::constant) {
    result.formula = folded;
    return result;
  }
  std::vector<PredPtr> kept;
  for (const PredPtr& conjunct : detail::top_level_conjuncts(folded)) {
    std::vector<int> vars = variables(conjunct);
    if (static_cast<int>(vars.size()) > kSimplifyMaxVars) {
      result.guard_exceeded = true;
      kept.push_back(conjunct);
      continue;
    }
    if (detail::is_tautology_exhaustive(conjunct, vars)) continue;
    kept.push_back(conjunct);
  }
  result.formula = Pred::conjunction(std::move(kept));
  return result;
}

/// PP(p) = and_{1<=i<=n} BP(p, i), after per-bit simplification.
inline PredPtr permutation_predicate(const LiteralPermutation& p, int n) {
  std::vector<PredPtr> bits;
  bits.reserve(n);
  for (int i = 1; i <= n; ++i) bits.push_back(bit_predicate(p, i, n));
  return simplify(Pred::conjunction(std::move(bits))).formula;
}

namespace detail {

/// Tries to read the node as one clause (a disjunction of literals, treating
/// an ordering atom a <= b as ~a | b).
inline std::optional<std::vector<Lit>> clause_literals(const PredPtr& p) {
  switch (p->kind()) {
    case Pred::Kind::literal:
      return std::vector<Lit>{p->lit()};
    case Pred::Kind::negation:
      if (p->args()[0]->kind() == Pred::Kind::literal)
        return std::vector<Lit>{p->args()[0]->lit().negated()};
      return std::nullopt;
    case Pred::Kind::ordering:
      return std::vector<Lit>{p->lhs().negated(), p->rhs()};
    case Pred::Kind::disjunction: {
      std::vector<Lit> lits;
      for (const PredPtr& arg : p->args()) {
        auto sub = clause_literals(arg);
        if (!sub) return std::nullopt;
        lits.insert(lits.end(), sub->begin(), sub->end());
      }
      return lits;
    }
    default:
      return std::nullopt;
  }
}

/// Definition-variable translation; returns the literal standing for the
/// node and appends the defining clauses.
inline Lit tseitin(const PredPtr& p, int& next_fresh, std::vector<Clause>& clauses) {
  switch (p->kind()) {
    case Pred::Kind::literal:
      return p->lit();
    case Pred::Kind::negation:
      return tseitin(p->args()[0], next_fresh, clauses).negated();
    case Pred::Kind::ordering: {
      const Lit a = p->lhs(), b = p->rhs();
      const Lit d = Lit::positive(next_fresh++);
      clauses.push_back(Clause({d.negated(), a.negated(), b}));
      clauses.push_back(Clause({d, a}));
      clauses.push_back(Clause({d, b.negated()}));
      return d;
    }
    case Pred::Kind::biconditional: {
      const Lit a = p->lhs(), b = p->rhs();
      const Lit d = Lit::positive(next_fresh++);
      clauses.push_back(Clause({d.negated(), a.negated(), b}));
      clauses.push_back(Clause({d.negated(), a, b.negated()}));
      clauses.push_back(Clause({d, a, b}));
      clauses.push_back(Clause({d, a.negated(), b.negated()}));
      return d;
    }
    case Pred::Kind::conjunction:
    case Pred::Kind::disjunction: {
      std::vector<Lit> parts;
      parts.reserve(p->args().size());
      for (const PredPtr& arg : p->args()) parts.push_back(tseitin(arg, next_fresh, clauses));
      const Lit d = Lit::positive(next_fresh++);
      const bool is_and = p->kind() == Pred::Kind::conjunction;
      std::vector<Lit> long_clause{is_and ? d : d.negated()};
      for (Lit part : parts) {
        clauses.push_back(Clause({is_and ? d.negated() : d, is_and ? part : part.negated()}));
        long_clause.push_back(is_and ? part.negated() : part);
      }
      clauses.push_back(Clause(std::move(long_clause)));
      return d;
    }
    case Pred::Kind::implication: {
      const Lit a = tseitin(p->args()[0], next_fresh, clauses);
      const Lit b = tseitin(p->args()[1], next_fresh, clauses);
      const Lit d = Lit::positive(next_fresh++);
      clauses.push_back(Clause({d.negated(), a.negated(), b}));
      clauses.push_back(Clause({d, a}));
      clauses.push_back(Clause({d, b.negated()}));
      return d;
    }
    case Pred::Kind::constant:
      break;
  }
  throw std::logic_error("constant node reached the definition translation");
}

}  // namespace detail

/// Clause translation preserving equisatisfiability in both directions: any
/// model of the output projects onto a model of the input, and any model of
/// the input extends to the output. Conjuncts that already are clauses pass
/// through verbatim; everything else gets one definition variable per
/// internal node, numbered densely from first_fresh_var.
inline SbpClauses to_cnf(const PredPtr& formula, int first_fresh_var) {
  if (first_fresh_var < 1) throw std::invalid_argument("fresh variables start at 1");
  SbpClauses out;
  out.num_base_vars = first_fresh_var - 1;
  int next_fresh = first_fresh_var;
  PredPtr folded = detail::fold(formula);
  for (const PredPtr& conjunct : detail::top_level_conjuncts(folded)) {
    if (conjunct->kind() == Pred::Kind::constant) {
      if (conjunct->constant_value()) continue;
      const Lit d = Lit::positive(next_fresh++);  // unsatisfiable conjunct
      out.clauses.push_back(Clause({d}));
      out.clauses.push_back(Clause({d.negated()}));
      continue;
    }
    if (auto lits = detail::clause_literals(conjunct)) {
      out.clauses.push_back(Clause(std::move(*lits)));
      continue;
    }
    const Lit root = detail::tseitin(conjunct, next_fresh, out.clauses);
    out.clauses.push_back(Clause({root}));
  }
  out.num_aux_vars = next_fresh - first_fresh_var;
  return out;
}

/// LL-SBP: the conjunction of the permutation predicates of all generators,
/// in generator order, converted to CNF.
inline SbpClauses lex_leader_sbp(const GeneratorSet& gens, int n) {
  std::vector<PredPtr> predicates;
  predicates.reserve(gens.generators.size());
  for (const Generator& gen : gens.generators) {
    if (!gen.perm.is_boolean_consistent())
      throw std::invalid_argument("lex-leader generator is not Boolean-consistent");
    predicates.push_back(permutation_predicate(gen.perm, n));
  }
  SbpClauses out = to_cnf(Pred::conjunction(std::move(predicates)), n + 1);
  out.method = SbpMethod::lex_leader;
  return out;
}

/// Pairwise SBP: one binary clause (~Xi | Xj), i < j, per positive-literal
/// transposition of each generator, deduplicated across generators. Defined
/// only for generators that are products of variable swaps; longer or
/// polarity-flipping cycles are rejected rather than skipped.
inline SbpClauses pairwise_sbp(const GeneratorSet& gens) {
  SbpClauses out;
  out.method = SbpMethod::pairwise;
  out.num_base_vars = gens.num_vars;
  std::set<Clause> seen;
  for (const Generator& gen : gens.generators) {
    const LiteralPermutation& p = gen.perm;
    if (!p.is_boolean_consistent())
      throw std::invalid_argument("pairwise generator is not Boolean-consistent");
    std::vector<bool> visited(p.num_literals(), false);
    for (int start = 0; start < p.num_literals(); ++start) {
      if (visited[start]) continue;
      std::vector<Lit> cycle;
      Lit l = Lit::from_code(start);
      do {
        visited[l.code()] = true;
        cycle.push_back(l);
        l = p.image_of(l);
      } while (l.code() != start);
      if (cycle.size() == 1) continue;
      const bool any_positive =
          std::any_of(cycle.begin(), cycle.end(), [](Lit x) { return x.is_positive(); });
      const bool any_negative =
          std::any_of(cycle.begin(), cycle.end(), [](Lit x) { return !x.is_positive(); });
      if (any_positive && any_negative)
        throw PairwiseInapplicableError(
            "pairwise SBP is undefined for polarity-flipping cycles: " + cycle_notation(p));
      if (!any_positive) continue;  // mirror of a positive cycle
      if (cycle.size() > 2)
        throw PairwiseInapplicableError(
            "pairwise SBP is undefined for cycles longer than 2: " + cycle_notation(p));
      const int i = std::min(cycle[0].var(), cycle[1].var());
      const int j = std::max(cycle[0].var(), cycle[1].var());
      Clause clause({Lit::negative(i), Lit::positive(j)});
      if (seen.insert(clause).second) out.clauses.push_back(std::move(clause));
    }
  }
  return out;
}

/// Formula times SBP: the variable count grows by the auxiliary count and the SBP
/// clauses follow the formula's clauses.
inline CnfFormula conjoin(const CnfFormula& f, const SbpClauses& sbp) {
  if (sbp.empty()) return f;
  if (sbp.num_base_vars != f.num_vars())
    throw std::invalid_argument("SBP was built for a different variable base (index overlap)");
  std::vector<Clause> clauses = f.clauses();
  clauses.insert(clauses.end(), sbp.clauses.begin(), sbp.clauses.end());
  return CnfFormula(f.num_vars() + sbp.num_aux_vars, std::move(clauses));
}

/// DIMACS fragment: the clauses only, no header, for appending to a file.
inline std::string write_dimacs_fragment(const SbpClauses& sbp) {
  std::ostringstream out;
  for (const Clause& c : sbp.clauses) {
    for (Lit l : c.lits()) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace symbreak
