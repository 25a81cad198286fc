// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "symbreak/cnf.hpp"

namespace symbreak {

/// A bijection on the 2n literals of a formula. Construction checks
/// bijectivity; Boolean consistency (commuting with complementation) is a
/// separate query because some call sites need to detect its violation.
class LiteralPermutation {
 public:
  static LiteralPermutation identity(int num_vars) {
    std::vector<Lit> image;
    image.reserve(std::size_t{2} * num_vars);
    for (int code = 0; code < 2 * num_vars; ++code) image.push_back(Lit::from_code(code));
    return LiteralPermutation(std::move(image));
  }

  /// image[l.code()] is the image of literal l.
  explicit LiteralPermutation(std::vector<Lit> image) : image_(std::move(image)) {
    if (image_.empty() || image_.size() % 2 != 0)
      throw std::invalid_argument("literal permutation must cover 2n literals");
    std::vector<bool> seen(image_.size(), false);
    for (Lit l : image_) {
      if (l.code() >= static_cast<int>(image_.size()) || seen[l.code()])
        throw std::invalid_argument("literal permutation is not a bijection");
      seen[l.code()] = true;
    }
  }

  int num_vars() const { return static_cast<int>(image_.size()) / 2; }
  int num_literals() const { return static_cast<int>(image_.size()); }

  Lit image_of(Lit l) const { return image_.at(l.code()); }

  bool is_identity() const {
    for (int code = 0; code < num_literals(); ++code)
      if (image_[code].code() != code) return false;
    return true;
  }

  /// image(~l) == ~image(l) for every literal.
  bool is_boolean_consistent() const {
    for (int code = 0; code < num_literals(); code += 2)
      if (image_[code].negated() != image_[code + 1]) return false;
    return true;
  }

  LiteralPermutation inverse() const {
    std::vector<Lit> inv(image_.size());
    for (int code = 0; code < num_literals(); ++code)
      inv[image_[code].code()] = Lit::from_code(code);
    return LiteralPermutation(std::move(inv));
  }

  friend auto operator<=>(const LiteralPermutation&, const LiteralPermutation&) = default;

 private:
  std::vector<Lit> image_;
};

/// first followed by second: x -> second(first(x)).
inline LiteralPermutation compose(const LiteralPermutation& first,
                                  const LiteralPermutation& second) {
  if (first.num_vars() != second.num_vars())
    throw std::invalid_argument("cannot compose permutations of different arity");
  std::vector<Lit> image;
  image.reserve(first.num_literals());
  for (int code = 0; code < first.num_literals(); ++code)
    image.push_back(second.image_of(first.image_of(Lit::from_code(code))));
  return LiteralPermutation(std::move(image));
}

/// Replaces every literal by its image. Clause-internal order renormalizes
/// through the Clause constructor; the clause list order is preserved.
inline CnfFormula apply_permutation(const CnfFormula& f, const LiteralPermutation& p) {
  if (p.num_vars() != f.num_vars())
    throw std::invalid_argument("permutation arity does not match formula");
  std::vector<Clause> clauses;
  clauses.reserve(f.clauses().size());
  for (const Clause& c : f.clauses()) {
    std::vector<Lit> lits;
    lits.reserve(c.lits().size());
    for (Lit l : c.lits()) lits.push_back(p.image_of(l));
    clauses.emplace_back(std::move(lits));
  }
  return CnfFormula(f.num_vars(), std::move(clauses));
}

/// The permuted assignment: the image literal takes the value of its
/// preimage, so models map to models under formula symmetries.
inline Assignment apply_permutation(const Assignment& a, const LiteralPermutation& p) {
  if (p.num_vars() != a.num_vars())
    throw std::invalid_argument("permutation arity does not match assignment");
  Assignment out(a.num_vars());
  for (int v = 1; v <= a.num_vars(); ++v) {
    Lit image = p.image_of(Lit::positive(v));
    out.set(image.var(), image.is_positive() ? a.value(v) : !a.value(v));
  }
  return out;
}

/// True iff the permuted formula equals the original when both are viewed as
/// multisets of literal sets.
inline bool is_symmetry(const CnfFormula& f, const LiteralPermutation& p) {
  CnfFormula g = apply_permutation(f, p);
  std::vector<Clause> a = f.clauses();
  std::vector<Clause> b = g.clauses();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline constexpr int kBruteForceMaxVars = 6;

/// Enumerates every Boolean-consistent literal permutation (all n! variable
/// permutations composed with all 2^n polarity flips) and keeps those that
/// are symmetries. The identity is always part of the result.
inline std::vector<LiteralPermutation> brute_force_symmetries(const CnfFormula& f) {
  const int n = f.num_vars();
  if (n > kBruteForceMaxVars)
    throw std::domain_error("brute_force_symmetries limited to " +
                            std::to_string(kBruteForceMaxVars) + " variables");
  std::vector<LiteralPermutation> result;
  std::vector<int> var_image(n);
  std::iota(var_image.begin(), var_image.end(), 1);
  do {
    for (std::uint32_t flips = 0; flips < (1u << n); ++flips) {
      std::vector<Lit> image(std::size_t{2} * n);
      for (int v = 1; v <= n; ++v) {
        const int w = var_image[v - 1];
        const bool flip = (flips >> (v - 1)) & 1;
        image[Lit::positive(v).code()] = flip ? Lit::negative(w) : Lit::positive(w);
        image[Lit::negative(v).code()] = flip ? Lit::positive(w) : Lit::negative(w);
      }
      LiteralPermutation p(std::move(image));
      if (is_symmetry(f, p)) result.push_back(std::move(p));
    }
  } while (std::next_permutation(var_image.begin(), var_image.end()));
  return result;
}

/// Disjoint-cycle rendering: fixed points omitted, cycles ordered by their
/// smallest member and rotated to start there. The identity prints as "()".
inline std::string cycle_notation(const LiteralPermutation& p) {
  std::ostringstream out;
  std::vector<bool> visited(p.num_literals(), false);
  bool any = false;
  for (int start = 0; start < p.num_literals(); ++start) {
    if (visited[start]) continue;
    Lit first = Lit::from_code(start);
    if (p.image_of(first) == first) {
      visited[start] = true;
      continue;
    }
    any = true;
    out << '(';
    Lit l = first;
    bool leading = true;
    do {
      visited[l.code()] = true;
      if (!leading) out << ' ';
      out << to_string(l);
      leading = false;
      l = p.image_of(l);
    } while (l != first);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

/// Machine form: "p <img(1)> ... <img(2n)>" where literal k (1-based code
/// order) maps to literal img(k).
inline std::string permutation_line(const LiteralPermutation& p) {
  std::ostringstream out;
  out << 'p';
  for (int code = 0; code < p.num_literals(); ++code)
    out << ' ' << p.image_of(Lit::from_code(code)).code() + 1;
  return out.str();
}

}  // namespace symbreak
