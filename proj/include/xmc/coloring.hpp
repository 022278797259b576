#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "xmc/ordered_graph.hpp"

namespace xmc {

/// Proper colouring with colours 1..num_colors, indexed by vertex position in
/// the graph it was computed for.
struct Coloring {
  std::vector<int> colors;
  int num_colors = 0;

  /// Colour of the vertex with the given label.
  int color_of(const OrderedGraph& graph, int label) const;
  std::map<int, int> by_label(const OrderedGraph& graph) const;
};

bool is_proper(const OrderedGraph& graph, const Coloring& coloring);

struct ChromaticResult {
  int chi = 0;
  Coloring coloring;
};

struct SolverBudget {
  std::uint64_t node_limit = 20'000'000;
  int max_vertices = 64;
};

/// Exact chromatic number by DSATUR branch and bound, seeded with the maximum
/// clique as lower bound and a DSATUR colouring as upper bound. Throws
/// Error(BudgetExceeded) when the node limit or vertex cap is hit.
ChromaticResult chi_exact(const OrderedGraph& graph, const SolverBudget& budget = {});

/// Convenience: just the number.
int chromatic_number(const OrderedGraph& graph, const SolverBudget& budget = {});

enum class HeuristicMode { FirstFitByOrder, Dsatur };

ChromaticResult chi_heuristic(const OrderedGraph& graph, HeuristicMode mode);

struct CliqueResult {
  int omega = 0;
  std::vector<int> vertices;  // ascending labels
};

/// Maximum clique; among maximum cliques the lexicographically least label
/// list is returned.
CliqueResult omega_exact(const OrderedGraph& graph);

bool is_clique(const OrderedGraph& graph, std::span<const int> labels);

/// Classes of pairwise non-adjacent elements.
struct ChainPartition {
  std::vector<std::vector<int>> classes;  // each ascending; ordered by first element
};

/// Minimum partition of grounded arcs into pairwise disjoint classes. Vertices
/// of `arc_graph` are arcs labelled by parent index, edges are crossings. Two
/// disjoint arcs are ordered by label; the chains of that order are found via
/// a maximum bipartite matching. Throws Error(NotAPoset) if the order is not
/// transitive.
ChainPartition dilworth_chain_partition(const OrderedGraph& arc_graph);

}  // namespace xmc
