#include "xmc/coloring.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "xmc/errors.hpp"

namespace xmc {

int Coloring::color_of(const OrderedGraph& graph, int label) const {
  int pos = graph.position(label);
  if (pos < 0) throw Error(ErrorCode::InvalidArgument, "label " + std::to_string(label) + " not in graph");
  return colors[static_cast<std::size_t>(pos)];
}

std::map<int, int> Coloring::by_label(const OrderedGraph& graph) const {
  std::map<int, int> out;
  for (int i = 0; i < graph.size(); ++i) out[graph.labels()[static_cast<std::size_t>(i)]] = colors[static_cast<std::size_t>(i)];
  return out;
}

bool is_proper(const OrderedGraph& graph, const Coloring& coloring) {
  const int n = graph.size();
  if (static_cast<int>(coloring.colors.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    int c = coloring.colors[static_cast<std::size_t>(i)];
    if (c < 1 || c > coloring.num_colors) return false;
    for (int j : graph.neighbors_at(i)) {
      if (coloring.colors[static_cast<std::size_t>(j)] == c) return false;
    }
  }
  return true;
}

namespace {

// Saturation bookkeeping shared by the DSATUR heuristic and the exact search.
class SaturationState {
 public:
  explicit SaturationState(const OrderedGraph& graph)
      : graph_(graph),
        n_(graph.size()),
        colors_(static_cast<std::size_t>(n_), 0),
        conflicts_(static_cast<std::size_t>(n_) * (static_cast<std::size_t>(n_) + 2), 0),
        saturation_(static_cast<std::size_t>(n_), 0) {}

  int color(int v) const { return colors_[static_cast<std::size_t>(v)]; }

  bool allowed(int v, int c) const { return conflict(v, c) == 0; }

  void assign(int v, int c) {
    colors_[static_cast<std::size_t>(v)] = c;
    for (int w : graph_.neighbors_at(v)) {
      if (conflict(w, c)++ == 0) ++saturation_[static_cast<std::size_t>(w)];
    }
  }

  void unassign(int v) {
    int c = colors_[static_cast<std::size_t>(v)];
    colors_[static_cast<std::size_t>(v)] = 0;
    for (int w : graph_.neighbors_at(v)) {
      if (--conflict(w, c) == 0) --saturation_[static_cast<std::size_t>(w)];
    }
  }

  /// Uncoloured vertex of maximum saturation, then maximum degree, then
  /// smallest position; -1 when all are coloured.
  int select() const {
    int best = -1;
    for (int v = 0; v < n_; ++v) {
      if (colors_[static_cast<std::size_t>(v)] != 0) continue;
      if (best < 0) {
        best = v;
        continue;
      }
      int sv = saturation_[static_cast<std::size_t>(v)];
      int sb = saturation_[static_cast<std::size_t>(best)];
      if (sv > sb || (sv == sb && graph_.neighbors_at(v).size() > graph_.neighbors_at(best).size())) best = v;
    }
    return best;
  }

  const std::vector<int>& colors() const { return colors_; }

 private:
  int& conflict(int v, int c) { return conflicts_[static_cast<std::size_t>(v) * (static_cast<std::size_t>(n_) + 2) + static_cast<std::size_t>(c)]; }
  int conflict(int v, int c) const {
    return conflicts_[static_cast<std::size_t>(v) * (static_cast<std::size_t>(n_) + 2) + static_cast<std::size_t>(c)];
  }

  const OrderedGraph& graph_;
  int n_;
  std::vector<int> colors_;
  std::vector<int> conflicts_;
  std::vector<int> saturation_;
};

Coloring finish(std::vector<int> colors) {
  Coloring out;
  out.num_colors = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
  out.colors = std::move(colors);
  return out;
}

}  // namespace

ChromaticResult chi_heuristic(const OrderedGraph& graph, HeuristicMode mode) {
  const int n = graph.size();
  SaturationState state(graph);
  for (int step = 0; step < n; ++step) {
    int v = mode == HeuristicMode::Dsatur ? state.select() : step;
    int c = 1;
    while (!state.allowed(v, c)) ++c;
    state.assign(v, c);
  }
  Coloring coloring = finish(state.colors());
  return {coloring.num_colors, std::move(coloring)};
}

ChromaticResult chi_exact(const OrderedGraph& graph, const SolverBudget& budget) {
  const int n = graph.size();
  if (n == 0) return {};
  if (n > budget.max_vertices) {
    throw Error(ErrorCode::BudgetExceeded,
                "exact colouring capped at " + std::to_string(budget.max_vertices) + " vertices, got " + std::to_string(n));
  }

  ChromaticResult best = chi_heuristic(graph, HeuristicMode::Dsatur);
  const CliqueResult clique = omega_exact(graph);
  const int lower = clique.omega;
  if (best.chi == lower) return best;

  SaturationState state(graph);
  // Any optimal colouring can be permuted to give the clique colours 1..omega.
  int precolored = 0;
  for (int label : clique.vertices) state.assign(graph.position(label), ++precolored);

  std::uint64_t nodes = 0;
  int best_count = best.chi;
  std::vector<int> best_colors = best.coloring.colors;

  std::function<void(int, int)> search = [&](int colored, int used) {
    if (++nodes > budget.node_limit) {
      throw Error(ErrorCode::BudgetExceeded, "exact colouring exceeded " + std::to_string(budget.node_limit) + " nodes");
    }
    if (colored == n) {
      best_count = used;
      best_colors = state.colors();
      return;
    }
    int v = state.select();
    for (int c = 1; c <= used + 1 && c < best_count; ++c) {
      if (!state.allowed(v, c)) continue;
      state.assign(v, c);
      search(colored + 1, std::max(used, c));
      state.unassign(v);
      if (best_count == lower) return;
    }
  };
  search(precolored, precolored);

  Coloring coloring = finish(std::move(best_colors));
  return {coloring.num_colors, std::move(coloring)};
}

int chromatic_number(const OrderedGraph& graph, const SolverBudget& budget) { return chi_exact(graph, budget).chi; }

namespace {

using Bits = std::vector<std::uint64_t>;

class CliqueSearch {
 public:
  explicit CliqueSearch(const OrderedGraph& graph) : n_(graph.size()), words_((n_ + 63) / 64) {
    adj_.assign(static_cast<std::size_t>(n_), Bits(words_, 0));
    for (int i = 0; i < n_; ++i) {
      for (int j : graph.neighbors_at(i)) set(adj_[static_cast<std::size_t>(i)], j);
    }
  }

  std::vector<int> run() {
    Bits all(words_, 0);
    for (int i = 0; i < n_; ++i) set(all, i);
    std::vector<int> current;
    expand(current, all);
    return best_;
  }

 private:
  static void set(Bits& b, int i) { b[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64); }
  static bool test(const Bits& b, int i) { return (b[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1U; }
  static int count(const Bits& b) {
    int c = 0;
    for (auto w : b) c += std::popcount(w);
    return c;
  }

  // Greedy sequential colouring of the candidate set: an upper bound on the
  // clique size inside it.
  int color_bound(const Bits& candidates) const {
    Bits uncolored = candidates;
    int colors = 0;
    while (count(uncolored) > 0) {
      ++colors;
      Bits avail = uncolored;
      for (int v = 0; v < n_; ++v) {
        if (!test(avail, v)) continue;
        uncolored[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
        for (std::size_t w = 0; w < words_; ++w) avail[w] &= ~adj_[static_cast<std::size_t>(v)][w];
        avail[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
      }
    }
    return colors;
  }

  // Cliques are visited in lexicographic order, so the first maximum one
  // found is the lexicographically least.
  void expand(std::vector<int>& current, const Bits& candidates) {
    if (current.size() > best_.size()) best_ = current;
    int remaining = count(candidates);
    if (static_cast<int>(current.size()) + remaining <= static_cast<int>(best_.size())) return;
    if (static_cast<int>(current.size()) + color_bound(candidates) <= static_cast<int>(best_.size())) return;
    for (int v = 0; v < n_; ++v) {
      if (!test(candidates, v)) continue;
      if (static_cast<int>(current.size()) + remaining <= static_cast<int>(best_.size())) return;
      --remaining;
      Bits next(words_, 0);
      for (std::size_t w = 0; w < words_; ++w) next[w] = candidates[w] & adj_[static_cast<std::size_t>(v)][w];
      for (int u = 0; u <= v; ++u) next[static_cast<std::size_t>(u) / 64] &= ~(std::uint64_t{1} << (u % 64));
      current.push_back(v);
      expand(current, next);
      current.pop_back();
    }
  }

  int n_;
  std::size_t words_;
  std::vector<Bits> adj_;
  std::vector<int> best_;
};

}  // namespace

CliqueResult omega_exact(const OrderedGraph& graph) {
  CliqueResult out;
  if (graph.empty()) return out;
  for (int pos : CliqueSearch(graph).run()) out.vertices.push_back(graph.labels()[static_cast<std::size_t>(pos)]);
  out.omega = static_cast<int>(out.vertices.size());
  return out;
}

bool is_clique(const OrderedGraph& graph, std::span<const int> labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!graph.contains(labels[i])) return false;
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (!graph.adjacent(labels[i], labels[j])) return false;
    }
  }
  return true;
}

ChainPartition dilworth_chain_partition(const OrderedGraph& arc_graph) {
  const int n = arc_graph.size();
  // precedes(i, j): arcs i < j by label and disjoint.
  auto precedes = [&](int i, int j) { return i < j && !arc_graph.adjacent_at(i, j); };

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!precedes(i, j)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (precedes(j, k) && !precedes(i, k)) {
          const auto& l = arc_graph.labels();
          throw Error(ErrorCode::NotAPoset, "arcs " + std::to_string(l[static_cast<std::size_t>(i)]) + " < " +
                                                std::to_string(l[static_cast<std::size_t>(j)]) + " < " +
                                                std::to_string(l[static_cast<std::size_t>(k)]) + " break transitivity");
        }
      }
    }
  }

  // Kuhn's augmenting paths on the split graph: left i -> right j if i precedes j.
  std::vector<int> match_right(static_cast<std::size_t>(n), -1);
  std::vector<int> match_left(static_cast<std::size_t>(n), -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int i) {
    for (int j = i + 1; j < n; ++j) {
      if (!precedes(i, j) || seen[static_cast<std::size_t>(j)]) continue;
      seen[static_cast<std::size_t>(j)] = 1;
      if (match_right[static_cast<std::size_t>(j)] < 0 || augment(match_right[static_cast<std::size_t>(j)])) {
        match_right[static_cast<std::size_t>(j)] = i;
        match_left[static_cast<std::size_t>(i)] = j;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < n; ++i) {
    seen.assign(static_cast<std::size_t>(n), 0);
    augment(i);
  }

  ChainPartition out;
  for (int start = 0; start < n; ++start) {
    if (match_right[static_cast<std::size_t>(start)] >= 0) continue;
    std::vector<int> chain;
    for (int v = start; v >= 0; v = match_left[static_cast<std::size_t>(v)]) {
      chain.push_back(arc_graph.labels()[static_cast<std::size_t>(v)]);
    }
    out.classes.push_back(std::move(chain));
  }
  return out;
}

}  // namespace xmc
