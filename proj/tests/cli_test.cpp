// SPDX-License-Identifier: MIT
#include "symbreak/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_util.hpp"

namespace symbreak {
namespace {

using testing::running_example_dimacs;

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = run_cli(std::move(args), in, out, err);
  return {code, out.str(), err.str()};
}

int count_occurrences(const std::string& text, const std::string& needle) {
  int count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++count;
  return count;
}

class TempCnfFile {
 public:
  explicit TempCnfFile(const std::string& contents) {
    path_ = std::filesystem::temp_directory_path() /
            ("symbreak_test_" + std::to_string(counter_++) + ".cnf");
    std::ofstream(path_) << contents;
  }
  ~TempCnfFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

TEST(CliEncodeTest, RunningExampleDot) {
  CliRun r = run({"encode", "-"}, running_example_dimacs());
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(count_occurrences(r.out, "label="), 13);
  EXPECT_EQ(count_occurrences(r.out, " -- "), 17);
}

TEST(CliEncodeTest, UnitClauseDot) {
  CliRun r = run({"encode", "-"}, "p cnf 1 1\n1 0\n");
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(count_occurrences(r.out, "label="), 3);
  EXPECT_EQ(count_occurrences(r.out, " -- "), 2);
}

TEST(CliEncodeTest, TextFormat) {
  CliRun r = run({"encode", "--format", "text", "-"}, "p cnf 1 1\n1 0\n");
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_NE(r.out.find("graph 3 vertices 2 edges"), std::string::npos);
  EXPECT_NE(r.out.find("c1: x1"), std::string::npos);
}

TEST(CliEncodeTest, MalformedInputExitsOne) {
  CliRun r = run({"encode", "-"}, "p cnf nope\n");
  EXPECT_EQ(r.exit_code, kExitInputError);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(CliEncodeTest, MissingFileExitsOne) {
  CliRun r = run({"encode", "/nonexistent/path.cnf"});
  EXPECT_EQ(r.exit_code, kExitInputError);
}

TEST(CliSymsTest, RunningExample) {
  CliRun r = run({"syms", "-"}, running_example_dimacs());
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.out, "(x3 x4)(~x3 ~x4)\n");
}

TEST(CliSymsTest, RigidFormulaPrintsNothing) {
  CliRun r = run({"syms", "-"}, "p cnf 1 1\n1 0\n");
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliSymsTest, MachineFormat) {
  CliRun r = run({"syms", "--format", "dimacs", "-"}, running_example_dimacs());
  EXPECT_EQ(r.exit_code, kExitOk);
  // x3<->x4 swap over 10 literal slots.
  EXPECT_EQ(r.out, "p 1 2 3 4 7 8 5 6 9 10\n");
}

TEST(CliSymsTest, LinesMatchTheDetectionPipeline) {
  const std::string input = "p cnf 6 2\n1 2 3 0\n4 5 6 0\n";
  CliRun r = run({"syms", "-"}, input);
  EXPECT_EQ(r.exit_code, kExitOk);
  std::string expected;
  for (const Generator& gen : find_generators(parse_dimacs(input)).generators)
    expected += gen.cycles + "\n";
  EXPECT_EQ(r.out, expected);
  EXPECT_NE(r.out.find("(x1 x2)(~x1 ~x2)\n"), std::string::npos);
}

TEST(CliSbpTest, LexProducesConjoinedFormula) {
  TempCnfFile file(running_example_dimacs());
  CliRun r = run({"sbp", file.path()});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.out, "p cnf 5 4\n1 -2 3 4 5 0\n2 -3 -4 5 0\n-1 2 -5 0\n-3 4 0\n");
}

TEST(CliSbpTest, PairwiseMatchesLexOnSingleTransposition) {
  CliRun lex = run({"sbp", "--method", "lex", "-"}, running_example_dimacs());
  CliRun pairwise = run({"sbp", "--method", "pairwise", "-"}, running_example_dimacs());
  EXPECT_EQ(lex.out, pairwise.out);
}

TEST(CliSbpTest, NoSymmetriesLeavesFormulaUnchanged) {
  const std::string input = "p cnf 1 1\n1 0\n";
  CliRun r = run({"sbp", "-"}, input);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.out, input);
}

TEST(CliSbpTest, OutputReparses) {
  CliRun r = run({"sbp", "-"}, running_example_dimacs());
  EXPECT_NO_THROW(parse_dimacs(r.out));
}

TEST(CliSbpTest, PairwiseRejectsLongCycles) {
  // (a+b+c): the automorphism group contains 3-cycles.
  CliRun r = run({"sbp", "--method", "pairwise", "-"}, "p cnf 3 1\n1 2 3 0\n");
  EXPECT_EQ(r.exit_code, kExitMethodError);
  EXPECT_NE(r.err.find("pairwise"), std::string::npos);
}

TEST(CliSolveTest, FirstModelAllFalse) {
  CliRun r = run({"solve", "-"}, "p cnf 2 2\n1 -2 0\n-1 2 0\n");
  EXPECT_EQ(r.exit_code, kExitSat);
  EXPECT_NE(r.out.find("s SATISFIABLE\n"), std::string::npos);
  EXPECT_NE(r.out.find("v -1 -2 0\n"), std::string::npos);
}

TEST(CliSolveTest, UnsatExitsTwenty) {
  CliRun r = run({"solve", "-"}, "p cnf 1 2\n1 0\n-1 0\n");
  EXPECT_EQ(r.exit_code, kExitUnsat);
  EXPECT_NE(r.out.find("s UNSATISFIABLE\n"), std::string::npos);
}

TEST(CliSolveTest, AutoSbpReportsPipeline) {
  CliRun r = run({"solve", "--auto-sbp", "-"}, running_example_dimacs());
  EXPECT_EQ(r.exit_code, kExitSat);
  EXPECT_NE(r.out.find("c generators 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("c sbp-method lex\n"), std::string::npos);
  EXPECT_NE(r.out.find("c sbp-clauses 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("c sbp-aux-vars 0\n"), std::string::npos);
  // Model covers the original five variables only.
  EXPECT_NE(r.out.find("v -1 -2 -3 -4 -5 0\n"), std::string::npos);
}

TEST(CliCompareTest, RunningExampleNumbers) {
  CliRun r = run({"compare", "-"}, running_example_dimacs());
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_NE(r.out.find("explored:      32 -> 24\n"), std::string::npos);
  EXPECT_NE(r.out.find("pruned-by-sbp: 8\n"), std::string::npos);
  EXPECT_NE(r.out.find("models:        25 -> 18\n"), std::string::npos);
  EXPECT_NE(r.out.find("status:        SAT -> SAT (equal)\n"), std::string::npos);
}

TEST(CliCompareTest, RigidFormulaKeepsFullSpace) {
  CliRun r = run({"compare", "-"}, "p cnf 2 2\n1 0\n1 -2 0\n");
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_NE(r.out.find("explored:      4 -> 4\n"), std::string::npos);
}

TEST(CliCompareTest, SymmetricFormulaStatusAgrees) {
  CliRun r = run({"compare", "-"}, "p cnf 6 2\n1 2 3 0\n4 5 6 0\n");
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_NE(r.out.find("(equal)"), std::string::npos);
}

TEST(CliTest, DeterministicOutput) {
  for (const char* cmd : {"encode", "syms", "sbp", "compare"}) {
    CliRun a = run({cmd, "-"}, running_example_dimacs());
    CliRun b = run({cmd, "-"}, running_example_dimacs());
    EXPECT_EQ(a.out, b.out) << cmd;
    EXPECT_EQ(a.exit_code, b.exit_code) << cmd;
  }
}

TEST(CliTest, UnknownSubcommandFails) {
  CliRun r = run({"frobnicate", "-"});
  EXPECT_EQ(r.exit_code, kExitInputError);
}

TEST(CliTest, UnsupportedFormatValueFails) {
  CliRun r = run({"encode", "--format", "dimacs", "-"}, running_example_dimacs());
  EXPECT_EQ(r.exit_code, kExitInputError);
}

TEST(CliTest, HelpExitsZero) {
  CliRun r = run({"--help"});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_NE(r.out.find("encode"), std::string::npos);
}

}  // namespace
}  // namespace symbreak
