// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symbreak/cnf.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/permutation.hpp"

namespace symbreak {

namespace detail {

inline std::vector<int> cell_index_of(const OrderedPartition& p, int num_vertices) {
  std::vector<int> cell_of(num_vertices, -1);
  for (int ci = 0; ci < p.num_cells(); ++ci)
    for (int v : p.cells[ci]) cell_of[v] = ci;
  return cell_of;
}

}  // namespace detail

/// Coarsest equitable refinement of an ordered partition: cells are split by
/// their members' edge counts into every current cell until every cell is
/// degree-uniform. A split replaces the cell in place by its fragments,
/// ordered by ascending count vector; members keep their relative order
/// inside a fragment.
inline OrderedPartition refine(const ColoredGraph& g, OrderedPartition p) {
  if (!p.is_partition_of(g.num_vertices()))
    throw std::invalid_argument("not a partition of the graph's vertices");

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> cell_of = detail::cell_index_of(p, g.num_vertices());
    for (int ci = 0; ci < p.num_cells(); ++ci) {
      const std::vector<int>& cell = p.cells[ci];
      if (cell.size() <= 1) continue;

      std::vector<std::pair<std::vector<int>, int>> keyed;
      keyed.reserve(cell.size());
      for (int v : cell) {
        std::vector<int> counts(p.num_cells(), 0);
        for (int u : g.neighbors(v)) ++counts[cell_of[u]];
        keyed.emplace_back(std::move(counts), v);
      }
      bool uniform = std::all_of(keyed.begin(), keyed.end(), [&](const auto& k) {
        return k.first == keyed.front().first;
      });
      if (uniform) continue;

      std::stable_sort(keyed.begin(), keyed.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      std::vector<std::vector<int>> fragments;
      for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) fragments.emplace_back();
        fragments.back().push_back(keyed[i].second);
      }
      p.cells.erase(p.cells.begin() + ci);
      p.cells.insert(p.cells.begin() + ci, fragments.begin(), fragments.end());
      changed = true;
      break;  // cell indices shifted; rescan from the first cell
    }
  }
  return p;
}

inline bool is_discrete(const OrderedPartition& p) {
  return std::all_of(p.cells.begin(), p.cells.end(),
                     [](const std::vector<int>& c) { return c.size() == 1; });
}

/// Index of the first non-singleton cell in cell order.
inline int select_target_cell(const OrderedPartition& p) {
  for (int ci = 0; ci < p.num_cells(); ++ci)
    if (p.cells[ci].size() > 1) return ci;
  throw std::logic_error("no target cell in a discrete partition");
}

/// Splits v's cell T into {v}, T-{v}, in that order; v must belong to a
/// non-singleton cell.
inline OrderedPartition individualize(const OrderedPartition& p, int vertex) {
  for (int ci = 0; ci < p.num_cells(); ++ci) {
    const auto& cell = p.cells[ci];
    if (std::find(cell.begin(), cell.end(), vertex) == cell.end()) continue;
    if (cell.size() < 2)
      throw std::invalid_argument("cannot individualize a vertex in a singleton cell");
    OrderedPartition out;
    out.cells.reserve(p.num_cells() + 1);
    out.cells.insert(out.cells.end(), p.cells.begin(), p.cells.begin() + ci);
    out.cells.push_back({vertex});
    std::vector<int> rest;
    rest.reserve(cell.size() - 1);
    for (int v : cell)
      if (v != vertex) rest.push_back(v);
    out.cells.push_back(std::move(rest));
    out.cells.insert(out.cells.end(), p.cells.begin() + ci + 1, p.cells.end());
    return out;
  }
  throw std::invalid_argument("vertex not present in partition");
}

/// A bijection on graph vertices; image[v] is the image of v.
struct VertexPermutation {
  std::vector<int> image;

  bool is_identity() const {
    for (std::size_t v = 0; v < image.size(); ++v)
      if (image[v] != static_cast<int>(v)) return false;
    return true;
  }

  friend auto operator<=>(const VertexPermutation&, const VertexPermutation&) = default;
};

/// Edge- and kind-preserving bijection check.
inline bool is_automorphism(const ColoredGraph& g, const VertexPermutation& vp) {
  if (static_cast<int>(vp.image.size()) != g.num_vertices()) return false;
  std::vector<bool> seen(vp.image.size(), false);
  for (int v = 0; v < g.num_vertices(); ++v) {
    int w = vp.image[v];
    if (w < 0 || w >= g.num_vertices() || seen[w]) return false;
    if (g.kind(v) != g.kind(w)) return false;
    seen[w] = true;
  }
  for (auto [u, v] : g.edges())
    if (!g.has_edge(vp.image[u], vp.image[v])) return false;
  return true;
}

enum class LeafComparison {
  against_first,  // compare every leaf against the first discovered leaf
  all_pairs,      // compare every pair of leaves (cross-checking mode)
};

/// Depth-first individualization-refinement search. The initial coloring is
/// refined; at each non-discrete node the first non-singleton cell is the
/// target and every member is branched on. Discrete leaves fix a vertex
/// labeling, and each pair of leaves whose relabeled adjacency structures
/// coincide yields the automorphism mapping one labeling to the other.
/// Returns the deduplicated nonidentity permutations found.
inline std::vector<VertexPermutation> search_automorphisms(
    const ColoredGraph& g, LeafComparison comparison = LeafComparison::against_first) {
  struct Leaf {
    std::vector<int> position;   // vertex -> position
    std::vector<int> vertex_at;  // position -> vertex
    std::vector<std::pair<int, int>> relabeled_edges;
  };

  const auto graph_edges = g.edges();
  auto make_leaf = [&](const OrderedPartition& p) {
    Leaf leaf;
    leaf.position.resize(g.num_vertices());
    leaf.vertex_at.resize(g.num_vertices());
    for (int ci = 0; ci < p.num_cells(); ++ci) {
      leaf.position[p.cells[ci].front()] = ci;
      leaf.vertex_at[ci] = p.cells[ci].front();
    }
    leaf.relabeled_edges.reserve(graph_edges.size());
    for (auto [u, v] : graph_edges) {
      int a = leaf.position[u];
      int b = leaf.position[v];
      leaf.relabeled_edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(leaf.relabeled_edges.begin(), leaf.relabeled_edges.end());
    return leaf;
  };

  std::vector<Leaf> leaves;
  std::optional<Leaf> first_leaf;
  std::vector<VertexPermutation> result;
  std::set<std::vector<int>> seen;

  // gamma maps the vertex at position k of `from` to the vertex at position
  // k of `to`; it is an automorphism exactly when the relabeled edges match.
  auto emit = [&](const Leaf& from, const Leaf& to) {
    if (from.relabeled_edges != to.relabeled_edges) return;
    VertexPermutation gamma;
    gamma.image.resize(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) gamma.image[v] = to.vertex_at[from.position[v]];
    if (gamma.is_identity()) return;
    if (seen.insert(gamma.image).second) result.push_back(std::move(gamma));
  };

  auto descend = [&](auto&& self, const OrderedPartition& p) -> void {
    if (is_discrete(p)) {
      Leaf leaf = make_leaf(p);
      if (comparison == LeafComparison::against_first) {
        if (!first_leaf)
          first_leaf = std::move(leaf);
        else
          emit(*first_leaf, leaf);
      } else {
        for (const Leaf& other : leaves) emit(other, leaf);
        leaves.push_back(std::move(leaf));
      }
      return;
    }
    const int target = select_target_cell(p);
    const std::vector<int> members = p.cells[target];
    for (int v : members) self(self, refine(g, individualize(p, v)));
  };

  descend(descend, refine(g, initial_coloring(g)));
  return result;
}

/// Restriction of a kind-preserving vertex permutation to the literal
/// vertices. Complement edges force Boolean consistency, but it is
/// re-checked here; a violation signals an encoding bug.
inline LiteralPermutation project_to_literals(const VertexPermutation& vp,
                                              const ColoredGraph& g) {
  if (static_cast<int>(vp.image.size()) != g.num_vertices())
    throw std::invalid_argument("vertex permutation does not match graph");
  const int literal_count = 2 * g.num_vars();
  std::vector<Lit> image;
  image.reserve(literal_count);
  for (int code = 0; code < literal_count; ++code) {
    int w = vp.image[code];
    if (w >= literal_count)
      throw std::invalid_argument("vertex permutation is not kind-preserving");
    image.push_back(Lit::from_code(w));
  }
  LiteralPermutation p(std::move(image));
  if (!p.is_boolean_consistent())
    throw std::logic_error("projected permutation violates Boolean consistency");
  return p;
}

/// A nonidentity symmetry generator together with its cycle rendering.
struct Generator {
  LiteralPermutation perm;
  std::string cycles;
};

struct GeneratorSet {
  int num_vars = 0;
  std::vector<Generator> generators;

  bool empty() const { return generators.empty(); }
  int size() const { return static_cast<int>(generators.size()); }
};

/// Full detection pipeline for a formula: encode, search the graph, project
/// the vertex permutations back to literals, and deduplicate. Every returned
/// generator is verified to be a symmetry of the formula.
inline GeneratorSet find_generators(const CnfFormula& f,
                                    LeafComparison comparison = LeafComparison::against_first) {
  const ColoredGraph g = encode(f);
  GeneratorSet out;
  out.num_vars = f.num_vars();
  std::set<LiteralPermutation> seen;
  for (const VertexPermutation& vp : search_automorphisms(g, comparison)) {
    LiteralPermutation lp = project_to_literals(vp, g);
    if (lp.is_identity()) continue;  // the automorphism only moved clause vertices
    if (!seen.insert(lp).second) continue;
    if (!is_symmetry(f, lp))
      throw std::logic_error("detected permutation is not a formula symmetry");
    out.generators.push_back({lp, cycle_notation(lp)});
  }
  return out;
}

}  // namespace symbreak
