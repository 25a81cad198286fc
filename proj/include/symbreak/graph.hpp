// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "symbreak/cnf.hpp"

namespace symbreak {

enum class VertexKind { literal, clause };

/// Undirected vertex-colored graph produced from a CNF formula.
///
/// Vertex numbering: the positive literal of variable v sits at 2(v-1), the
/// negative literal at 2(v-1)+1, and clause j (0-based) at 2n+j. Both
/// polarities of every variable get a vertex even when one never occurs, so
/// the numbering depends only on the variable count.
class ColoredGraph {
 public:
  ColoredGraph(int num_vars, int num_clauses, const std::vector<std::pair<int, int>>& edges)
      : num_vars_(num_vars), num_clauses_(num_clauses), adj_(2 * num_vars + num_clauses) {
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
        throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loops are not allowed");
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& neighbors : adj_) {
      std::sort(neighbors.begin(), neighbors.end());
      if (std::adjacent_find(neighbors.begin(), neighbors.end()) != neighbors.end())
        throw std::invalid_argument("duplicate edge");
    }
    num_edges_ = static_cast<int>(edges.size());
  }

  int num_vars() const { return num_vars_; }
  int num_clauses() const { return num_clauses_; }
  int num_vertices() const { return 2 * num_vars_ + num_clauses_; }
  int num_edges() const { return num_edges_; }

  VertexKind kind(int v) const {
    return v < 2 * num_vars_ ? VertexKind::literal : VertexKind::clause;
  }

  int literal_vertex(Lit l) const { return l.code(); }
  Lit vertex_literal(int v) const { return Lit::from_code(v); }
  int clause_vertex(int clause_index) const { return 2 * num_vars_ + clause_index; }
  int vertex_clause(int v) const { return v - 2 * num_vars_; }

  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  bool has_edge(int u, int v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Edges as normalized (min,max) pairs, sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(num_edges_);
    for (int u = 0; u < num_vertices(); ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

 private:
  int num_vars_;
  int num_clauses_;
  int num_edges_;
  std::vector<std::vector<int>> adj_;
};

/// Builds the graph of a formula: one edge per (clause, member literal) pair
/// plus one complement edge per variable. 2n+m vertices in total.
inline ColoredGraph encode(const CnfFormula& f) {
  const int n = f.num_vars();
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= n; ++v)
    edges.emplace_back(Lit::positive(v).code(), Lit::negative(v).code());
  for (int j = 0; j < f.num_clauses(); ++j)
    for (Lit l : f.clauses()[j].lits())
      edges.emplace_back(l.code(), 2 * n + j);
  return ColoredGraph(n, f.num_clauses(), edges);
}

/// An ordered sequence of disjoint nonempty vertex cells covering all
/// vertices; the cell order is significant.
struct OrderedPartition {
  std::vector<std::vector<int>> cells;

  int num_cells() const { return static_cast<int>(cells.size()); }

  int num_vertices() const {
    int total = 0;
    for (const auto& cell : cells) total += static_cast<int>(cell.size());
    return total;
  }

  bool is_partition_of(int num_vertices) const {
    std::vector<bool> seen(num_vertices, false);
    for (const auto& cell : cells) {
      if (cell.empty()) return false;
      for (int v : cell) {
        if (v < 0 || v >= num_vertices || seen[v]) return false;
        seen[v] = true;
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

/// The two-cell initial coloring: all literal vertices, then all clause
/// vertices. A formula without clauses yields a single cell.
inline OrderedPartition initial_coloring(const ColoredGraph& g) {
  OrderedPartition p;
  std::vector<int> literals(std::size_t{2} * g.num_vars());
  for (int v = 0; v < 2 * g.num_vars(); ++v) literals[v] = v;
  p.cells.push_back(std::move(literals));
  if (g.num_clauses() > 0) {
    std::vector<int> clauses(g.num_clauses());
    for (int j = 0; j < g.num_clauses(); ++j) clauses[j] = g.clause_vertex(j);
    p.cells.push_back(std::move(clauses));
  }
  return p;
}

/// DOT rendering with literal vertices as ellipses (x1, ~x1, ...) and clause
/// vertices as boxes (c1, ...).
inline std::string to_dot(const ColoredGraph& g) {
  std::ostringstream out;
  out << "graph cnf {\n";
  for (int v = 1; v <= g.num_vars(); ++v) {
    out << "  x" << v << " [label=\"x" << v << "\", shape=ellipse];\n";
    out << "  nx" << v << " [label=\"~x" << v << "\", shape=ellipse];\n";
  }
  for (int j = 1; j <= g.num_clauses(); ++j)
    out << "  c" << j << " [label=\"c" << j << "\", shape=box];\n";

  auto node_name = [&](int v) -> std::string {
    if (g.kind(v) == VertexKind::clause)
      return "c" + std::to_string(g.vertex_clause(v) + 1);
    Lit l = g.vertex_literal(v);
    return (l.is_positive() ? "x" : "nx") + std::to_string(l.var());
  };
  for (auto [u, v] : g.edges())
    out << "  " << node_name(u) << " -- " << node_name(v) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace symbreak
