// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symbreak/automorphism.hpp"
#include "symbreak/cnf.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/sbp.hpp"
#include "symbreak/solver.hpp"

namespace symbreak {

// Exit codes: 0 success (non-solve commands), 10 SAT, 20 UNSAT,
// 1 input error, 2 method inapplicable.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitMethodError = 2;
inline constexpr int kExitSat = 10;
inline constexpr int kExitUnsat = 20;

namespace cli_detail {

inline CnfFormula load_formula(const std::string& path, std::istream& in) {
  if (path == "-") return parse_dimacs(in);
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "'");
  return parse_dimacs(file);
}

inline SbpMethod parse_method(const std::string& name) {
  return name == "pairwise" ? SbpMethod::pairwise : SbpMethod::lex_leader;
}

inline SbpClauses build_sbp(const CnfFormula& f, const GeneratorSet& gens, SbpMethod method) {
  return method == SbpMethod::pairwise ? pairwise_sbp(gens)
                                       : lex_leader_sbp(gens, f.num_vars());
}

inline std::string vertex_name(const ColoredGraph& g, int v) {
  if (g.kind(v) == VertexKind::clause) return "c" + std::to_string(g.vertex_clause(v) + 1);
  return to_string(g.vertex_literal(v));
}

inline int cmd_encode(const CnfFormula& f, const std::string& format, std::ostream& out) {
  const ColoredGraph g = encode(f);
  if (format == "dot") {
    out << to_dot(g);
    return kExitOk;
  }
  out << "graph " << g.num_vertices() << " vertices " << g.num_edges() << " edges\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    out << vertex_name(g, v) << ':';
    for (int u : g.neighbors(v)) out << ' ' << vertex_name(g, u);
    out << '\n';
  }
  return kExitOk;
}

inline int cmd_syms(const CnfFormula& f, const std::string& format, std::ostream& out) {
  const GeneratorSet gens = find_generators(f);
  for (const Generator& gen : gens.generators) {
    if (format == "dimacs")
      out << permutation_line(gen.perm) << '\n';
    else
      out << gen.cycles << '\n';
  }
  return kExitOk;
}

inline int cmd_sbp(const CnfFormula& f, SbpMethod method, std::ostream& out) {
  const GeneratorSet gens = find_generators(f);
  const SbpClauses sbp = build_sbp(f, gens, method);
  write_dimacs(conjoin(f, sbp), out);
  return kExitOk;
}

inline void print_stats(const SearchStats& stats, std::ostream& out) {
  out << "c decisions " << stats.decisions << '\n';
  out << "c propagations " << stats.propagations << '\n';
  out << "c conflicts " << stats.conflicts << '\n';
  out << "c leaves " << stats.leaves_visited << '\n';
}

inline int cmd_solve(const CnfFormula& f, bool auto_sbp, SbpMethod method, std::ostream& out) {
  CnfFormula target = f;
  if (auto_sbp) {
    const GeneratorSet gens = find_generators(f);
    const SbpClauses sbp = build_sbp(f, gens, method);
    target = conjoin(f, sbp);
    out << "c generators " << gens.size() << '\n';
    out << "c sbp-method " << (method == SbpMethod::pairwise ? "pairwise" : "lex") << '\n';
    out << "c sbp-clauses " << sbp.clauses.size() << '\n';
    out << "c sbp-aux-vars " << sbp.num_aux_vars << '\n';
  }
  const SolveResult result = solve(target);
  print_stats(result.stats, out);
  if (result.status == Status::sat) {
    out << "s SATISFIABLE\n";
    out << 'v';  // model over the original variables only
    for (int v = 1; v <= f.num_vars(); ++v)
      out << ' ' << (result.model->value(v) ? v : -v);
    out << " 0\n";
    return kExitSat;
  }
  out << "s UNSATISFIABLE\n";
  return kExitUnsat;
}

inline int cmd_compare(const CnfFormula& f, SbpMethod method, std::ostream& out) {
  const GeneratorSet gens = find_generators(f);
  const SbpClauses sbp = build_sbp(f, gens, method);
  const CompareReport report = compare_runs(f, sbp);
  auto status_name = [](Status s) { return s == Status::sat ? "SAT" : "UNSAT"; };
  out << "generators:    " << gens.size() << '\n';
  out << "sbp-clauses:   " << sbp.clauses.size() << '\n';
  out << "status:        " << status_name(report.base.status) << " -> "
      << status_name(report.augmented.status) << (report.status_equal ? " (equal)" : " (DIFFER)")
      << '\n';
  out << "models:        " << report.base_models << " -> " << report.augmented_models << '\n';
  out << "explored:      " << report.base_explored << " -> " << report.augmented_explored << '\n';
  out << "pruned-by-sbp: " << report.base_explored - report.augmented_explored << '\n';
  out << "decisions:     " << report.base.stats.decisions << " -> "
      << report.augmented.stats.decisions << '\n';
  out << "propagations:  " << report.base.stats.propagations << " -> "
      << report.augmented.stats.propagations << '\n';
  out << "conflicts:     " << report.base.stats.conflicts << " -> "
      << report.augmented.stats.conflicts << '\n';
  out << "leaves:        " << report.base.stats.leaves_visited << " -> "
      << report.augmented.stats.leaves_visited << '\n';
  return kExitOk;
}

}  // namespace cli_detail

/// Command-line front end: encode | syms | sbp | solve | compare over a
/// DIMACS file ("-" reads standard input). Returns the process exit code.
inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"CNF symmetry breaking toolkit"};
  app.name("symbreak");
  app.require_subcommand(1);

  std::string input;
  std::string format = "text";
  std::string method = "lex";
  bool auto_sbp = false;

  CLI::App* encode_cmd =
      app.add_subcommand("encode", "Write the colored graph of a CNF formula");
  encode_cmd->add_option("input", input, "DIMACS CNF file, or - for stdin")->required();
  encode_cmd->add_option("--format", format, "Output format (default: dot)")
      ->check(CLI::IsMember({"dot", "text"}));

  CLI::App* syms_cmd =
      app.add_subcommand("syms", "Print symmetry generators in cycle notation");
  syms_cmd->add_option("input", input, "DIMACS CNF file, or - for stdin")->required();
  syms_cmd->add_option("--format", format, "Output format (default: text)")
      ->check(CLI::IsMember({"text", "dimacs"}));

  CLI::App* sbp_cmd =
      app.add_subcommand("sbp", "Conjoin a symmetry breaking predicate and print DIMACS");
  sbp_cmd->add_option("input", input, "DIMACS CNF file, or - for stdin")->required();
  sbp_cmd->add_option("--method", method, "SBP construction (default: lex)")
      ->check(CLI::IsMember({"lex", "pairwise"}));

  CLI::App* solve_cmd = app.add_subcommand("solve", "Run the DPLL solver");
  solve_cmd->add_option("input", input, "DIMACS CNF file, or - for stdin")->required();
  solve_cmd->add_flag("--auto-sbp", auto_sbp,
                      "Detect symmetries and conjoin an SBP before solving");
  solve_cmd->add_option("--method", method, "SBP construction (default: lex)")
      ->check(CLI::IsMember({"lex", "pairwise"}));

  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Report search-space pruning with and without the SBP");
  compare_cmd->add_option("input", input, "DIMACS CNF file, or - for stdin")->required();
  compare_cmd->add_option("--method", method, "SBP construction (default: lex)")
      ->check(CLI::IsMember({"lex", "pairwise"}));

  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    const CnfFormula f = cli_detail::load_formula(input, in);
    if (encode_cmd->parsed()) {
      if (!encode_cmd->count("--format")) format = "dot";
      return cli_detail::cmd_encode(f, format, out);
    }
    if (syms_cmd->parsed()) return cli_detail::cmd_syms(f, format, out);
    if (sbp_cmd->parsed()) return cli_detail::cmd_sbp(f, cli_detail::parse_method(method), out);
    if (solve_cmd->parsed())
      return cli_detail::cmd_solve(f, auto_sbp, cli_detail::parse_method(method), out);
    if (compare_cmd->parsed())
      return cli_detail::cmd_compare(f, cli_detail::parse_method(method), out);
    err << "error: no subcommand selected\n";
    return kExitInputError;
  } catch (const PairwiseInapplicableError& e) {
    err << "error: " << e.what() << '\n';
    return kExitMethodError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace symbreak
