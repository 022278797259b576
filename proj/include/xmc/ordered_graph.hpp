#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xmc/family.hpp"

namespace xmc {

using Edge = std::pair<int, int>;

/// Undirected graph on integer labels whose order is the vertex order. Labels
/// survive taking induced subgraphs, so F(i,j) keeps the indices of F.
class OrderedGraph {
 public:
  OrderedGraph() = default;

  /// Labels are sorted and deduplicated. Edges must join two distinct labels
  /// of the vertex set; otherwise Error(InvalidArgument).
  OrderedGraph(std::vector<int> labels, std::span<const Edge> edges);

  /// Vertices 1..n.
  static OrderedGraph with_vertices(int n, std::span<const Edge> edges = {});
  static OrderedGraph complete(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }
  const std::vector<int>& labels() const { return labels_; }

  bool contains(int label) const;
  bool adjacent(int u, int v) const;
  /// Neighbour labels in ascending order.
  std::vector<int> neighbors(int label) const;
  int degree(int label) const;

  /// All edges (u < v), sorted.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const { return edge_count_; }

  /// Subgraph induced by the given labels (those not in the graph are ignored).
  OrderedGraph induced(std::span<const int> labels) const;

  // Positional access: vertex i (0-based) has label labels()[i].
  int position(int label) const;
  bool adjacent_at(int i, int j) const { return matrix_[static_cast<std::size_t>(i) * labels_.size() + j] != 0; }
  const std::vector<int>& neighbors_at(int i) const { return adjacency_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const OrderedGraph& a, const OrderedGraph& b) {
    return a.labels_ == b.labels_ && a.matrix_ == b.matrix_;
  }

 private:
  std::vector<int> labels_;
  std::vector<char> matrix_;
  std::vector<std::vector<int>> adjacency_;  // positions, ascending
  std::size_t edge_count_ = 0;
};

/// One of (i,j), [i,j], (i,j], [i,j) with either side possibly unbounded.
struct IntervalSpec {
  std::optional<int> lo;  // nullopt = -inf
  std::optional<int> hi;  // nullopt = +inf
  bool lo_closed = true;
  bool hi_closed = true;

  static IntervalSpec open(int lo, int hi) { return {lo, hi, false, false}; }
  static IntervalSpec closed(int lo, int hi) { return {lo, hi, true, true}; }
  static IntervalSpec open_closed(int lo, int hi) { return {lo, hi, false, true}; }
  static IntervalSpec closed_open(int lo, int hi) { return {lo, hi, true, false}; }
  static IntervalSpec all() { return {std::nullopt, std::nullopt, true, true}; }

  bool contains(int i) const;
};

/// Edge {i,j} iff curves i and j properly cross.
OrderedGraph build_intersection_graph(const CurveFamily& family);

/// Same for any curve list (e.g. two-sided curves); labels are the curve ids.
OrderedGraph build_intersection_graph(std::span<const PolyCurve> curves);

/// F(I): subgraph induced on labels within I.
OrderedGraph induced_interval(const OrderedGraph& graph, const IntervalSpec& interval);

/// Crossing pairs (by curve id, smaller first) of single-segment curves via a
/// Bentley-Ottmann sweep. Requires a family in general position (validated).
std::set<Edge> sweep_segment_pairs(std::span<const PolyCurve> segments);

/// Reference pairwise method used for comparison with the sweep.
std::set<Edge> pairwise_crossing_pairs(std::span<const PolyCurve> curves);

/// `i: j k l` per vertex.
std::string to_adjacency_list(const OrderedGraph& graph);
std::string to_dot(const OrderedGraph& graph, const std::string& name = "G");

}  // namespace xmc
