#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xmc/coloring.hpp"

namespace xmc {

// ---------------------------------------------------------------------------
// lambda schedule

struct ProofParameters {
  int k = 2;
  BigInt lambda_k;        // by the recurrence lambda_2 = 1, lambda_k = 5 lambda_{k-1} + 121
  BigInt threshold_log2;  // by the closed form (5^{k+1} - 121) / 4
};

/// Throws Error(KTooSmall) for k < 2.
ProofParameters lambda_schedule(int k);

/// chi(F(a,b)) - 2^{lambda_k + 1} - factor * 2^{2 lambda_k + 102}, the lower
/// bound on chi(D) from the key lemma. The lemma states factor = k; the final
/// induction step applies it with factor = 1. Both are reported; at desk
/// scale both are negative.
struct KeyLemmaBound {
  BigInt with_k_factor;
  BigInt without_k_factor;
  bool vacuous = true;  // both bounds <= 0
};

KeyLemmaBound key_lemma_bound(const ProofParameters& params, long chi_f_ab);

// ---------------------------------------------------------------------------
// distance layers

struct DistanceLayers {
  int source = 0;
  std::vector<std::vector<int>> layers;  // labels at BFS distance 0, 1, 2, ...
};

/// BFS layers of the source's component. Throws Error(InvalidArgument) if
/// the source is not a vertex.
DistanceLayers distance_layers(const OrderedGraph& graph, int source);

struct LayerChi {
  int layer = 0;  // least d attaining the maximum
  int chi = 0;
};

LayerChi max_layer_chi(const OrderedGraph& graph, const DistanceLayers& layers, const SolverBudget& budget = {});

// ---------------------------------------------------------------------------
// alpha-sequences

struct AlphaSequence {
  int alpha = 1;
  std::vector<int> breakpoints;  // r_0 <= r_1 < ... < r_m (labels)

  int m() const { return breakpoints.empty() ? 0 : static_cast<int>(breakpoints.size()) - 1; }

  /// Vertex labels of F[r_0,r_1], F(r_1,r_2], ..., F(r_{m-1},r_m].
  std::vector<std::vector<int>> blocks(const OrderedGraph& graph) const;
};

/// Greedy-leftmost alpha-sequence: each block ends at the least label where
/// its chromatic number reaches alpha. Throws Error(InvalidArgument) for
/// alpha < 1.
AlphaSequence alpha_sequence(const OrderedGraph& graph, int alpha, const SolverBudget& budget = {});

// ---------------------------------------------------------------------------
// gap subgraph

struct GapSubgraph {
  OrderedGraph h;
  AlphaSequence sequence;  // the 2^b-sequence used
  int color_class = 0;     // colour whose class was split
  bool even_blocks = true; // H is the union over blocks 0, 2, 4, ...
  int chi_h = 0;
};

/// Induced H with chi(H) > 2^a such that every edge uv of H has
/// chi(G(u,v)) >= 2^b. Requires chi(G) > 2^{a+b+1}; otherwise
/// Error(PreconditionFailed).
GapSubgraph extract_gap_subgraph(const OrderedGraph& graph, int a, int b, const SolverBudget& budget = {});

// ---------------------------------------------------------------------------
// key lemma sets

struct KeyLemmaSets {
  int a = 0;
  int b = 0;
  std::vector<int> I_a, I_b, D_a, D_b, D_ab, Da_ab, Db_ab, D;
};

/// Requires a < b adjacent; otherwise Error(NotCrossing).
KeyLemmaSets key_lemma_sets(const OrderedGraph& graph, int a, int b);
KeyLemmaSets key_lemma_sets(const CurveFamily& family, const OrderedGraph& graph, int a, int b);

// ---------------------------------------------------------------------------
// grounded arcs

enum class AnchorSide { A, B };
enum class ArcSide { Above, Below, Mixed };

std::string_view to_string(ArcSide side);

/// The part of the parent curve from its left endpoint to its crossing with
/// the anchor curve.
struct Arc {
  int parent = 0;
  PolyCurve geometry;
};

/// Prefix of `curve` ending at its (unique) crossing with `anchor`. Throws
/// Error(NotCrossing) if they do not cross.
Arc grounded_arc(const PolyCurve& curve, const PolyCurve& anchor);

struct ArcRange {
  int curve = 0;
  int l = 0;             // 1-based position in the class of the lowest arc met
  int u = 0;             // highest
  ArcSide side = ArcSide::Above;
  std::vector<int> met;  // 1-based positions of every arc met, ascending
  bool contiguous() const { return static_cast<int>(met.size()) == u - l + 1; }
};

struct ArcClassTable {
  std::vector<int> arcs;  // parents A_{p_1}, ..., A_{p_m} bottom to top
  std::vector<int> S;     // D-curves meeting some arc of the class
  std::vector<ArcRange> ranges;  // one per member of S
  int chi_S = 0;
};

struct ArcAnalysis {
  int anchor = 0;
  AnchorSide side = AnchorSide::A;
  std::vector<Arc> arcs;
  OrderedGraph arc_graph;
  ChainPartition classes;
  std::vector<ArcClassTable> tables;  // parallel to classes.classes
  int chosen = 0;                     // 0-based class with maximum chi(S_t), least on ties

  const ArcClassTable& chosen_table() const { return tables.at(static_cast<std::size_t>(chosen)); }
};

/// A side: arcs of I_a grounded on C_a, D-curves from D^a_ab. B side: the
/// same with b. Requires a nonempty I-set (Error(PreconditionFailed)).
ArcAnalysis grounded_arcs(const CurveFamily& family, const OrderedGraph& graph, const KeyLemmaSets& sets,
                          AnchorSide side, const SolverBudget& budget = {});

// ---------------------------------------------------------------------------
// neighbour removal

struct RemovalReport {
  std::vector<int> kept;            // H: not a pivot, not adjacent to any pivot
  int chi_graph = 0;
  int chi_kept = 0;
  std::vector<int> chi_open;        // chi(N(p)) per pivot
  std::vector<int> chi_closed;      // chi(N[p]) = chi of the curves meeting C_p, itself included
  /// chi(H) >= chi(G) - sum chi(N[p]).
  bool bound_holds() const;
};

RemovalReport remove_neighbors(const OrderedGraph& graph, std::span<const int> pivots, const SolverBudget& budget = {});

// ---------------------------------------------------------------------------
// isolation

struct IsolationResult {
  bool ok = true;
  std::optional<int> violator;
};

/// Every curve meeting C_a or C_b and some member of D lies outside [a,b].
IsolationResult isolation_check(const OrderedGraph& graph, const KeyLemmaSets& sets);

/// `set <name> : i1 i2 ...` lines, followed by arc classes and u/l tables
/// when an analysis is given.
std::string key_lemma_trace(const KeyLemmaSets& sets, const ArcAnalysis* arcs = nullptr);

}  // namespace xmc
