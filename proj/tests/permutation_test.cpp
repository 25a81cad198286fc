// SPDX-License-Identifier: MIT
#include "symbreak/permutation.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace symbreak {
namespace {

using testing::from_variable_cycles;
using testing::polarity_flip;
using testing::running_example;
using testing::transposition;
using testing::two_disjoint_triples;

TEST(LiteralPermutationTest, RejectsNonBijections) {
  std::vector<Lit> image{Lit::positive(1), Lit::positive(1)};
  EXPECT_THROW(LiteralPermutation{image}, std::invalid_argument);
  EXPECT_THROW(LiteralPermutation{std::vector<Lit>{Lit::positive(1)}}, std::invalid_argument);
}

TEST(LiteralPermutationTest, BooleanConsistency) {
  EXPECT_TRUE(transposition(2, 1, 2).is_boolean_consistent());
  EXPECT_TRUE(polarity_flip(2, {1}).is_boolean_consistent());
  // x1 -> x1, ~x1 -> x2, x2 -> ~x1, ~x2 -> ~x2: bijective but inconsistent.
  std::vector<Lit> image{Lit::positive(1), Lit::positive(2), Lit::negative(1), Lit::negative(2)};
  LiteralPermutation p(image);
  EXPECT_FALSE(p.is_boolean_consistent());
}

TEST(LiteralPermutationTest, ComposeAndInverse) {
  const int n = 4;
  LiteralPermutation a = transposition(n, 1, 2);
  LiteralPermutation b = transposition(n, 2, 3);
  LiteralPermutation ab = compose(a, b);
  // x1 goes to x2 under a, then to x3 under b.
  EXPECT_EQ(ab.image_of(Lit::positive(1)), Lit::positive(3));
  EXPECT_TRUE(compose(a, a.inverse()).is_identity());
  EXPECT_TRUE(compose(ab, ab.inverse()).is_identity());
}

TEST(ApplyPermutationTest, SwapWithinClauseKeepsClauseSet) {
  const CnfFormula f = two_disjoint_triples();
  CnfFormula g = apply_permutation(f, transposition(6, 1, 2));
  EXPECT_EQ(g, f);  // (b+a+c) normalizes back to (a+b+c)
}

TEST(ApplyPermutationTest, IdentityFixesFormula) {
  const CnfFormula f = running_example();
  EXPECT_EQ(apply_permutation(f, LiteralPermutation::identity(5)), f);
}

TEST(ApplyPermutationTest, RunningExampleGenerator) {
  const CnfFormula f = running_example();
  CnfFormula g = apply_permutation(f, from_variable_cycles(5, {{3, 4}}));
  EXPECT_TRUE(is_symmetry(f, from_variable_cycles(5, {{3, 4}})));
  // Same multiset of clause sets, though clause-internal images moved.
  std::vector<Clause> lhs = f.clauses(), rhs = g.clauses();
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  EXPECT_EQ(lhs, rhs);
}

TEST(ApplyPermutationTest, ArityMismatchRejected) {
  EXPECT_THROW(apply_permutation(running_example(), transposition(4, 1, 2)), std::invalid_argument);
}

TEST(IsSymmetryTest, DisjointTriplesSymmetries) {
  const CnfFormula f = two_disjoint_triples();
  EXPECT_TRUE(is_symmetry(f, transposition(6, 1, 2)));
  EXPECT_TRUE(is_symmetry(f, from_variable_cycles(6, {{1, 4}, {2, 5}, {3, 6}})));
}

TEST(IsSymmetryTest, TwoVariableSwap) {
  EXPECT_TRUE(is_symmetry(testing::two_var_biconditional(), transposition(2, 1, 2)));
}

TEST(IsSymmetryTest, NonSymmetryDetected) {
  EXPECT_FALSE(is_symmetry(running_example(), transposition(5, 1, 2)));
}

TEST(BruteForceTest, RunningExampleGroupIsOneSwap) {
  auto syms = brute_force_symmetries(running_example());
  ASSERT_EQ(syms.size(), 2u);  // identity plus the x3/x4 swap
  const LiteralPermutation expected = from_variable_cycles(5, {{3, 4}});
  EXPECT_TRUE(std::any_of(syms.begin(), syms.end(),
                          [&](const LiteralPermutation& p) { return p.is_identity(); }));
  EXPECT_TRUE(std::any_of(syms.begin(), syms.end(),
                          [&](const LiteralPermutation& p) { return p == expected; }));
}

TEST(BruteForceTest, TwoTriplesContainTableTwoRows) {
  auto syms = brute_force_symmetries(two_disjoint_triples());
  auto contains = [&](const LiteralPermutation& p) {
    return std::find(syms.begin(), syms.end(), p) != syms.end();
  };
  EXPECT_TRUE(contains(transposition(6, 1, 2)));
  EXPECT_TRUE(contains(from_variable_cycles(6, {{1, 4}, {2, 5}, {3, 6}})));
  EXPECT_EQ(syms.size(), 72u);
}

TEST(BruteForceTest, GuardRejectsLargeFormulas) {
  EXPECT_THROW(brute_force_symmetries(CnfFormula(7, {Clause({1})})), std::domain_error);
}

TEST(BruteForceTest, GroupClosedUnderCompositionAndInverse) {
  std::mt19937 rng(411);
  for (int trial = 0; trial < 15; ++trial) {
    CnfFormula f = testing::random_formula(rng, 1, 4);
    auto syms = brute_force_symmetries(f);
    std::set<LiteralPermutation> group(syms.begin(), syms.end());
    for (const auto& g : syms) {
      EXPECT_TRUE(group.count(g.inverse()));
      for (const auto& h : syms) EXPECT_TRUE(group.count(compose(g, h)));
    }
  }
}

TEST(BruteForceTest, EvaluationRespectsSymmetry) {
  std::mt19937 rng(603);
  for (int trial = 0; trial < 10; ++trial) {
    CnfFormula f = testing::random_formula(rng, 1, 4);
    auto syms = brute_force_symmetries(f);
    for (const auto& p : syms) {
      for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << f.num_vars()); ++idx) {
        Assignment a = Assignment::from_index(f.num_vars(), idx);
        EXPECT_EQ(evaluate(f, a), evaluate(f, apply_permutation(a, p)));
      }
    }
  }
}

TEST(CycleNotationTest, KnownRenderings) {
  EXPECT_EQ(cycle_notation(from_variable_cycles(5, {{3, 4}})), "(x3 x4)(~x3 ~x4)");
  EXPECT_EQ(cycle_notation(LiteralPermutation::identity(3)), "()");
  EXPECT_EQ(cycle_notation(from_variable_cycles(6, {{1, 2}, {3, 4}, {5, 6}})),
            "(x1 x2)(~x1 ~x2)(x3 x4)(~x3 ~x4)(x5 x6)(~x5 ~x6)");
}

TEST(CycleNotationTest, CyclesStartAtSmallestMember) {
  EXPECT_EQ(cycle_notation(from_variable_cycles(3, {{2, 3, 1}})),
            "(x1 x2 x3)(~x1 ~x2 ~x3)");
  EXPECT_EQ(cycle_notation(polarity_flip(2, {2})), "(x2 ~x2)");
}

TEST(PermutationLineTest, MachineFormat) {
  // Swap of x1/x2 over n=2: literal indices 1..4 map to 3 4 1 2.
  EXPECT_EQ(permutation_line(transposition(2, 1, 2)), "p 3 4 1 2");
  EXPECT_EQ(permutation_line(LiteralPermutation::identity(2)), "p 1 2 3 4");
}

}  // namespace
}  // namespace symbreak
