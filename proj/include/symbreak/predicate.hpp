// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "symbreak/cnf.hpp"

namespace symbreak {

class Pred;
using PredPtr = std::shared_ptr<const Pred>;

/// Node of a Boolean formula tree: constants, literals, negation,
/// conjunction, disjunction, implication, plus the two atoms the lex-leader
/// construction builds over literal pairs — biconditional (a = b) and
/// ordering (a <= b, i.e. ~a | b).
class Pred {
 public:
  enum class Kind {
    constant,
    literal,
    negation,
    conjunction,
    disjunction,
    implication,
    biconditional,
    ordering,
  };

  static PredPtr constant(bool value) {
    auto p = std::make_shared<Pred>(Kind::constant);
    p->value_ = value;
    return p;
  }

  static PredPtr literal(Lit l) {
    auto p = std::make_shared<Pred>(Kind::literal);
    p->lhs_ = l;
    return p;
  }

  static PredPtr negation(PredPtr arg) {
    auto p = std::make_shared<Pred>(Kind::negation);
    p->args_.push_back(std::move(arg));
    return p;
  }

  /// Empty conjunctions collapse to true and singletons to their element.
  static PredPtr conjunction(std::vector<PredPtr> args) {
    if (args.empty()) return constant(true);
    if (args.size() == 1) return args.front();
    auto p = std::make_shared<Pred>(Kind::conjunction);
    p->args_ = std::move(args);
    return p;
  }

  static PredPtr disjunction(std::vector<PredPtr> args) {
    if (args.empty()) return constant(false);
    if (args.size() == 1) return args.front();
    auto p = std::make_shared<Pred>(Kind::disjunction);
    p->args_ = std::move(args);
    return p;
  }

  static PredPtr implication(PredPtr antecedent, PredPtr consequent) {
    auto p = std::make_shared<Pred>(Kind::implication);
    p->args_.push_back(std::move(antecedent));
    p->args_.push_back(std::move(consequent));
    return p;
  }

  static PredPtr biconditional(Lit a, Lit b) {
    auto p = std::make_shared<Pred>(Kind::biconditional);
    p->lhs_ = a;
    p->rhs_ = b;
    return p;
  }

  static PredPtr ordering(Lit a, Lit b) {
    auto p = std::make_shared<Pred>(Kind::ordering);
    p->lhs_ = a;
    p->rhs_ = b;
    return p;
  }

  explicit Pred(Kind kind) : kind_(kind) {}

  Kind kind() const { return kind_; }
  bool constant_value() const { return value_; }
  Lit lhs() const { return lhs_; }
  Lit rhs() const { return rhs_; }
  Lit lit() const { return lhs_; }
  const std::vector<PredPtr>& args() const { return args_; }

 private:
  Kind kind_;
  bool value_ = false;
  Lit lhs_;
  Lit rhs_;
  std::vector<PredPtr> args_;
};

inline bool evaluate(const PredPtr& p, const Assignment& a) {
  switch (p->kind()) {
    case Pred::Kind::constant:
      return p->constant_value();
    case Pred::Kind::literal:
      return a.value(p->lit());
    case Pred::Kind::negation:
      return !evaluate(p->args()[0], a);
    case Pred::Kind::conjunction:
      for (const PredPtr& arg : p->args())
        if (!evaluate(arg, a)) return false;
      return true;
    case Pred::Kind::disjunction:
      for (const PredPtr& arg : p->args())
        if (evaluate(arg, a)) return true;
      return false;
    case Pred::Kind::implication:
      return !evaluate(p->args()[0], a) || evaluate(p->args()[1], a);
    case Pred::Kind::biconditional:
      return a.value(p->lhs()) == a.value(p->rhs());
    case Pred::Kind::ordering:
      return !a.value(p->lhs()) || a.value(p->rhs());
  }
  throw std::logic_error("unreachable predicate kind");
}

namespace detail {
inline void collect_variables(const PredPtr& p, std::set<int>& vars) {
  switch (p->kind()) {
    case Pred::Kind::constant:
      return;
    case Pred::Kind::literal:
      vars.insert(p->lit().var());
      return;
    case Pred::Kind::biconditional:
    case Pred::Kind::ordering:
      vars.insert(p->lhs().var());
      vars.insert(p->rhs().var());
      return;
    default:
      for (const PredPtr& arg : p->args()) collect_variables(arg, vars);
  }
}
}  // namespace detail

/// Sorted distinct variables referenced by the formula.
inline std::vector<int> variables(const PredPtr& p) {
  std::set<int> vars;
  detail::collect_variables(p, vars);
  return {vars.begin(), vars.end()};
}

inline std::string to_string(const PredPtr& p) {
  switch (p->kind()) {
    case Pred::Kind::constant:
      return p->constant_value() ? "1" : "0";
    case Pred::Kind::literal:
      return to_string(p->lit());
    case Pred::Kind::negation:
      return "!" + to_string(p->args()[0]);
    case Pred::Kind::conjunction:
    case Pred::Kind::disjunction: {
      std::ostringstream out;
      const char* sep = p->kind() == Pred::Kind::conjunction ? " & " : " | ";
      out << '(';
      for (std::size_t i = 0; i < p->args().size(); ++i) {
        if (i > 0) out << sep;
        out << to_string(p->args()[i]);
      }
      out << ')';
      return out.str();
    }
    case Pred::Kind::implication:
      return "(" + to_string(p->args()[0]) + " -> " + to_string(p->args()[1]) + ")";
    case Pred::Kind::biconditional:
      return "(" + to_string(p->lhs()) + " = " + to_string(p->rhs()) + ")";
    case Pred::Kind::ordering:
      return "(" + to_string(p->lhs()) + " <= " + to_string(p->rhs()) + ")";
  }
  throw std::logic_error("unreachable predicate kind");
}

}  // namespace symbreak
