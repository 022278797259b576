#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xmc/coloring.hpp"

namespace xmc {

enum class ConfigKind { Type1, Type2, Type3, CrossingClique };

std::string_view to_string(ConfigKind kind);
/// Accepts `type1|type2|type3|clique` and the digits `1|2|3`.
ConfigKind parse_config_kind(std::string_view text);

/// Index certificate of a configuration. Type1: clique K1, lonely curve q
/// above it; Type2: q below K1; Type3: K1 < q < K2. CrossingClique: K1 only.
struct ConfigWitness {
  ConfigKind kind = ConfigKind::Type1;
  std::vector<int> K1;
  std::vector<int> K2;
  std::optional<int> q;

  int k() const { return static_cast<int>(K1.size()); }

  /// All indices in ascending order; the tie-break key.
  std::vector<int> tuple() const;

  friend bool operator==(const ConfigWitness&, const ConfigWitness&) = default;
};

/// `witness <kind> k=<k> K1=<i,j,...> K2=<...> q=<q>`; empty lists and a
/// missing q are written as `-`.
std::string to_string(const ConfigWitness& w);
ConfigWitness parse_witness(std::string_view line);

struct DetectOptions {
  int max_vertices = 24;
};

/// Lexicographically least witness of the requested kind with cliques of
/// size k, or nullopt. Throws Error(KTooSmall) for k < 2 and
/// Error(BudgetExceeded) above the vertex cap.
std::optional<ConfigWitness> detect_config(const CurveFamily& family, const OrderedGraph& graph, ConfigKind kind,
                                           int k, const DetectOptions& options = {});

/// Checks every defining condition of the claimed kind.
bool verify_witness(const CurveFamily& family, const OrderedGraph& graph, const ConfigWitness& w);

/// Whether x(C_j) <= x(K). Requires K a clique, min(K) < j < max(K) and j
/// disjoint from K; otherwise Error(PreconditionFailed).
bool lemma_short_check(const CurveFamily& family, const OrderedGraph& graph, std::span<const int> K, int j);

/// All cliques of the given size in lexicographic order, restricted to the
/// candidate labels.
std::vector<std::vector<int>> enumerate_cliques(const OrderedGraph& graph, std::span<const int> candidates, int size);

}  // namespace xmc
