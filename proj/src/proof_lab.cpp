#include "xmc/proof_lab.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "xmc/errors.hpp"

namespace xmc {

namespace {

int chi_of(const OrderedGraph& graph, std::span<const int> labels, const SolverBudget& budget) {
  return chromatic_number(graph.induced(labels), budget);
}

BigInt pow2(const BigInt& exponent) {
  if (exponent > BigInt(1) << 22) {
    throw Error(ErrorCode::InvalidArgument, "2^" + exponent.get_str() + " is too large to materialise");
  }
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent.get_ui());
  return out;
}

}  // namespace

ProofParameters lambda_schedule(int k) {
  if (k < 2) throw Error(ErrorCode::KTooSmall, "k must be at least 2, got " + std::to_string(k));
  ProofParameters p;
  p.k = k;
  p.lambda_k = 1;
  for (int j = 3; j <= k; ++j) p.lambda_k = 5 * p.lambda_k + 121;

  BigInt five_pow;
  mpz_ui_pow_ui(five_pow.get_mpz_t(), 5, static_cast<unsigned long>(k + 1));
  BigInt numerator = five_pow - 121;
  if (!mpz_divisible_ui_p(numerator.get_mpz_t(), 4)) {
    throw Error(ErrorCode::InvalidArgument, "5^(k+1) - 121 not divisible by 4");
  }
  p.threshold_log2 = numerator / 4;
  if (p.threshold_log2 != p.lambda_k) {
    throw Error(ErrorCode::InvalidArgument, "lambda recurrence and closed form disagree at k = " + std::to_string(k));
  }
  return p;
}

KeyLemmaBound key_lemma_bound(const ProofParameters& params, long chi_f_ab) {
  BigInt independent = pow2(params.lambda_k + 1);
  BigInt dependent = pow2(2 * params.lambda_k + 102);
  KeyLemmaBound out;
  out.with_k_factor = BigInt(chi_f_ab) - independent - params.k * dependent;
  out.without_k_factor = BigInt(chi_f_ab) - independent - dependent;
  out.vacuous = out.with_k_factor <= 0 && out.without_k_factor <= 0;
  return out;
}

DistanceLayers distance_layers(const OrderedGraph& graph, int source) {
  const int s = graph.position(source);
  if (s < 0) throw Error(ErrorCode::InvalidArgument, "source " + std::to_string(source) + " not in graph");
  std::vector<int> dist(static_cast<std::size_t>(graph.size()), -1);
  dist[static_cast<std::size_t>(s)] = 0;
  std::deque<int> queue{s};
  DistanceLayers out;
  out.source = source;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    int d = dist[static_cast<std::size_t>(v)];
    if (static_cast<int>(out.layers.size()) <= d) out.layers.emplace_back();
    out.layers[static_cast<std::size_t>(d)].push_back(graph.labels()[static_cast<std::size_t>(v)]);
    for (int w : graph.neighbors_at(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = d + 1;
        queue.push_back(w);
      }
    }
  }
  for (auto& layer : out.layers) std::sort(layer.begin(), layer.end());
  return out;
}

LayerChi max_layer_chi(const OrderedGraph& graph, const DistanceLayers& layers, const SolverBudget& budget) {
  LayerChi best;
  for (std::size_t d = 0; d < layers.layers.size(); ++d) {
    int chi = chi_of(graph, layers.layers[d], budget);
    if (chi > best.chi) best = {static_cast<int>(d), chi};
  }
  return best;
}

std::vector<std::vector<int>> AlphaSequence::blocks(const OrderedGraph& graph) const {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < m(); ++i) {
    IntervalSpec interval = i == 0 ? IntervalSpec::closed(breakpoints[0], breakpoints[1])
                                   : IntervalSpec::open_closed(breakpoints[static_cast<std::size_t>(i)],
                                                               breakpoints[static_cast<std::size_t>(i) + 1]);
    std::vector<int> block;
    for (int l : graph.labels()) {
      if (interval.contains(l)) block.push_back(l);
    }
    out.push_back(std::move(block));
  }
  return out;
}

AlphaSequence alpha_sequence(const OrderedGraph& graph, int alpha, const SolverBudget& budget) {
  if (alpha < 1) throw Error(ErrorCode::InvalidArgument, "alpha must be at least 1");
  AlphaSequence seq;
  seq.alpha = alpha;
  const auto& labels = graph.labels();
  const int n = graph.size();
  if (n == 0) return seq;

  auto chi_range = [&](int first, int last) {
    std::span<const int> range(labels.data() + first, static_cast<std::size_t>(last - first + 1));
    return chi_of(graph, range, budget);
  };

  seq.breakpoints.push_back(labels.front());
  int start = 0;
  while (start < n) {
    if (chi_range(start, n - 1) < alpha) {
      seq.breakpoints.push_back(labels.back());
      break;
    }
    // chi of a prefix grows by at most one per vertex, so the least end with
    // chi >= alpha has chi == alpha; prefix chi is monotone, so bisect.
    int lo = start;
    int hi = n - 1;
    while (lo < hi) {
      int mid = lo + (hi - lo) / 2;
      if (chi_range(start, mid) >= alpha) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    seq.breakpoints.push_back(labels[static_cast<std::size_t>(lo)]);
    start = lo + 1;
  }
  return seq;
}

GapSubgraph extract_gap_subgraph(const OrderedGraph& graph, int a, int b, const SolverBudget& budget) {
  if (a < 0 || b < 0 || a + b + 1 > 30) throw Error(ErrorCode::InvalidArgument, "a, b must be small non-negative integers");
  const int chi_g = chromatic_number(graph, budget);
  if (chi_g <= (1 << (a + b + 1))) {
    throw Error(ErrorCode::PreconditionFailed, "chi(G) = " + std::to_string(chi_g) + " does not exceed 2^" +
                                                   std::to_string(a + b + 1));
  }

  GapSubgraph out;
  const int block_chi = 1 << b;
  out.sequence = alpha_sequence(graph, block_chi, budget);
  const auto blocks = out.sequence.blocks(graph);

  // Colour every block properly with colours 1..2^b.
  std::vector<int> color(static_cast<std::size_t>(graph.size()), 0);
  std::vector<int> block_of(static_cast<std::size_t>(graph.size()), 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    OrderedGraph sub = graph.induced(blocks[i]);
    ChromaticResult r = chi_exact(sub, budget);
    for (int p = 0; p < sub.size(); ++p) {
      int pos = graph.position(sub.labels()[static_cast<std::size_t>(p)]);
      color[static_cast<std::size_t>(pos)] = r.coloring.colors[static_cast<std::size_t>(p)];
      block_of[static_cast<std::size_t>(pos)] = static_cast<int>(i);
    }
  }

  // chi(G) <= sum over classes of chi(class) and chi(G) > 2^b * 2^{a+1}, so
  // some class has chi > 2^{a+1}; then one parity half has chi > 2^a.
  const int class_target = 1 << (a + 1);
  for (int c = 1; c <= block_chi; ++c) {
    std::vector<int> members;
    for (int p = 0; p < graph.size(); ++p) {
      if (color[static_cast<std::size_t>(p)] == c) members.push_back(graph.labels()[static_cast<std::size_t>(p)]);
    }
    if (chi_of(graph, members, budget) <= class_target) continue;

    std::vector<int> even;
    std::vector<int> odd;
    for (int l : members) {
      (block_of[static_cast<std::size_t>(graph.position(l))] % 2 == 0 ? even : odd).push_back(l);
    }
    const int target = 1 << a;
    for (bool use_even : {true, false}) {
      OrderedGraph h = graph.induced(use_even ? even : odd);
      int chi_h = chromatic_number(h, budget);
      if (chi_h > target) {
        out.h = std::move(h);
        out.color_class = c;
        out.even_blocks = use_even;
        out.chi_h = chi_h;
        return out;
      }
    }
    throw Error(ErrorCode::InvalidArgument, "gap construction: neither parity half exceeds 2^a");
  }
  throw Error(ErrorCode::InvalidArgument, "gap construction: no colour class exceeds 2^{a+1}");
}

KeyLemmaSets key_lemma_sets(const OrderedGraph& graph, int a, int b) {
  if (a >= b) throw Error(ErrorCode::InvalidArgument, "key lemma needs a < b");
  if (!graph.adjacent(a, b)) {
    throw Error(ErrorCode::NotCrossing, "curves " + std::to_string(a) + " and " + std::to_string(b) + " do not cross");
  }
  KeyLemmaSets s;
  s.a = a;
  s.b = b;
  for (int i : graph.labels()) {
    if (i <= a || i >= b) continue;
    (graph.adjacent(i, a) ? s.I_a : s.D_a).push_back(i);
    (graph.adjacent(i, b) ? s.I_b : s.D_b).push_back(i);
  }
  std::set_intersection(s.D_a.begin(), s.D_a.end(), s.D_b.begin(), s.D_b.end(), std::back_inserter(s.D_ab));
  auto meets_any = [&](int i, const std::vector<int>& set) {
    return std::any_of(set.begin(), set.end(), [&](int j) { return graph.adjacent(i, j); });
  };
  for (int i : s.D_ab) {
    bool in_a = meets_any(i, s.I_a);
    bool in_b = meets_any(i, s.I_b);
    if (in_a) s.Da_ab.push_back(i);
    if (in_b) s.Db_ab.push_back(i);
    if (!in_a && !in_b) s.D.push_back(i);
  }
  return s;
}

KeyLemmaSets key_lemma_sets(const CurveFamily& family, const OrderedGraph& graph, int a, int b) {
  if (static_cast<std::size_t>(std::max(a, b)) > family.size() || std::min(a, b) < 1) {
    throw Error(ErrorCode::InvalidArgument, "index outside the family");
  }
  return key_lemma_sets(graph, a, b);
}

std::string_view to_string(ArcSide side) {
  switch (side) {
    case ArcSide::Above: return "above";
    case ArcSide::Below: return "below";
    case ArcSide::Mixed: return "mixed";
  }
  return "?";
}

Arc grounded_arc(const PolyCurve& curve, const PolyCurve& anchor) {
  auto crossings = crossing_points(curve, anchor);
  if (crossings.empty()) {
    throw Error(ErrorCode::NotCrossing, "curve " + std::to_string(curve.id) + " does not cross " + std::to_string(anchor.id));
  }
  const Point& end = crossings.front();
  Arc arc;
  arc.parent = curve.id;
  arc.geometry.id = curve.id;
  for (const Point& p : curve.vertices) {
    if (p.x < end.x) arc.geometry.vertices.push_back(p);
  }
  arc.geometry.vertices.push_back(end);
  return arc;
}

ArcAnalysis grounded_arcs(const CurveFamily& family, const OrderedGraph& graph, const KeyLemmaSets& sets,
                          AnchorSide side, const SolverBudget& budget) {
  const bool a_side = side == AnchorSide::A;
  const std::vector<int>& grounded = a_side ? sets.I_a : sets.I_b;
  const std::vector<int>& d_curves = a_side ? sets.Da_ab : sets.Db_ab;
  if (grounded.empty()) throw Error(ErrorCode::PreconditionFailed, a_side ? "I_a is empty" : "I_b is empty");

  ArcAnalysis out;
  out.anchor = a_side ? sets.a : sets.b;
  out.side = side;
  const PolyCurve& anchor = family.curve(out.anchor);
  for (int i : grounded) out.arcs.push_back(grounded_arc(family.curve(i), anchor));

  std::vector<Edge> arc_edges;
  for (std::size_t i = 0; i < out.arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < out.arcs.size(); ++j) {
      if (curves_cross(out.arcs[i].geometry, out.arcs[j].geometry)) arc_edges.emplace_back(out.arcs[i].parent, out.arcs[j].parent);
    }
  }
  out.arc_graph = OrderedGraph(grounded, arc_edges);
  out.classes = dilworth_chain_partition(out.arc_graph);

  auto arc_of = [&](int parent) -> const Arc& {
    return *std::find_if(out.arcs.begin(), out.arcs.end(), [&](const Arc& a) { return a.parent == parent; });
  };

  int best_chi = -1;
  for (std::size_t t = 0; t < out.classes.classes.size(); ++t) {
    ArcClassTable table;
    table.arcs = out.classes.classes[t];
    for (int i : d_curves) {
      ArcRange range;
      range.curve = i;
      bool above = false;
      bool below = false;
      for (std::size_t j = 0; j < table.arcs.size(); ++j) {
        if (!curves_cross(family.curve(i), arc_of(table.arcs[j]).geometry)) continue;
        range.met.push_back(static_cast<int>(j) + 1);
        (table.arcs[j] > i ? above : below) = true;
      }
      if (range.met.empty()) continue;
      range.l = range.met.front();
      range.u = range.met.back();
      range.side = above && below ? ArcSide::Mixed : (above ? ArcSide::Above : ArcSide::Below);
      table.S.push_back(i);
      table.ranges.push_back(std::move(range));
    }
    table.chi_S = chi_of(graph, table.S, budget);
    if (table.chi_S > best_chi) {
      best_chi = table.chi_S;
      out.chosen = static_cast<int>(t);
    }
    out.tables.push_back(std::move(table));
  }
  return out;
}

bool RemovalReport::bound_holds() const {
  int removed = 0;
  for (int c : chi_closed) removed += c;
  return chi_kept >= chi_graph - removed;
}

RemovalReport remove_neighbors(const OrderedGraph& graph, std::span<const int> pivots, const SolverBudget& budget) {
  std::vector<int> sorted(pivots.begin(), pivots.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidArgument, "pivots must be distinct");
  }
  for (int p : sorted) {
    if (!graph.contains(p)) throw Error(ErrorCode::InvalidArgument, "pivot " + std::to_string(p) + " not in graph");
  }

  RemovalReport out;
  for (int v : graph.labels()) {
    bool drop = std::binary_search(sorted.begin(), sorted.end(), v) ||
                std::any_of(sorted.begin(), sorted.end(), [&](int p) { return graph.adjacent(v, p); });
    if (!drop) out.kept.push_back(v);
  }
  out.chi_graph = chromatic_number(graph, budget);
  out.chi_kept = chi_of(graph, out.kept, budget);
  for (int p : pivots) {
    std::vector<int> open = graph.neighbors(p);
    out.chi_open.push_back(chi_of(graph, open, budget));
    open.push_back(p);
    out.chi_closed.push_back(chi_of(graph, open, budget));
  }
  return out;
}

IsolationResult isolation_check(const OrderedGraph& graph, const KeyLemmaSets& sets) {
  for (int i : graph.labels()) {
    if (!graph.adjacent(i, sets.a) && !graph.adjacent(i, sets.b)) continue;
    bool meets_d = std::any_of(sets.D.begin(), sets.D.end(), [&](int d) { return graph.adjacent(i, d); });
    if (meets_d && i >= sets.a && i <= sets.b) return {false, i};
  }
  return {};
}

std::string key_lemma_trace(const KeyLemmaSets& sets, const ArcAnalysis* arcs) {
  std::ostringstream out;
  auto line = [&](std::string_view tag, std::string_view name, const std::vector<int>& values) {
    out << tag << ' ' << name << " :";
    for (int v : values) out << ' ' << v;
    out << '\n';
  };
  out << "keylemma a=" << sets.a << " b=" << sets.b << '\n';
  line("set", "I_a", sets.I_a);
  line("set", "I_b", sets.I_b);
  line("set", "D_a", sets.D_a);
  line("set", "D_b", sets.D_b);
  line("set", "D_ab", sets.D_ab);
  line("set", "Da_ab", sets.Da_ab);
  line("set", "Db_ab", sets.Db_ab);
  line("set", "D", sets.D);
  if (arcs == nullptr) return out.str();

  out << "arcs anchor=" << arcs->anchor << " side=" << (arcs->side == AnchorSide::A ? 'a' : 'b')
      << " classes=" << arcs->classes.classes.size() << " chosen=" << arcs->chosen + 1 << '\n';
  for (std::size_t t = 0; t < arcs->tables.size(); ++t) {
    const ArcClassTable& table = arcs->tables[t];
    line("class", std::to_string(t + 1), table.arcs);
    line("S", std::to_string(t + 1), table.S);
    out << "chi_S " << t + 1 << " : " << table.chi_S << '\n';
    for (const ArcRange& r : table.ranges) {
      out << "ul " << t + 1 << ' ' << r.curve << " : l=" << r.l << " u=" << r.u << " side=" << to_string(r.side) << " met=";
      for (std::size_t j = 0; j < r.met.size(); ++j) out << (j ? "," : "") << r.met[j];
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace xmc
