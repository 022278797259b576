// Acceptance checks: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "xmc/errors.hpp"

using namespace xmc;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Criterion 12 collects every graph seen by the other criteria.
struct Sanity {
  int graphs = 0;
  int violations = 0;

  void check(const OrderedGraph& g) {
    ++graphs;
    int omega = omega_exact(g).omega;
    int chi = chi_exact(g).chi;
    int dsatur = chi_heuristic(g, HeuristicMode::Dsatur).chi;
    if (!(omega <= chi && chi <= dsatur)) ++violations;
  }
} sanity;

std::vector<int> open_range(const OrderedGraph& g, int a, int b) {
  std::vector<int> out;
  for (int v : g.labels()) {
    if (a < v && v < b) out.push_back(v);
  }
  return out;
}

std::vector<int> sorted_union(std::vector<int> x, const std::vector<int>& y) {
  x.insert(x.end(), y.begin(), y.end());
  std::sort(x.begin(), x.end());
  return x;
}

std::vector<int> difference(const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

std::vector<int> intersection(const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

Outcome lambda_schedule_check() {
  Outcome o;
  BigInt lambda = 1;
  for (int k = 2; k <= 40; ++k) {
    if (k > 2) lambda = 5 * lambda + 121;
    BigInt closed;
    mpz_ui_pow_ui(closed.get_mpz_t(), 5, static_cast<unsigned long>(k + 1));
    closed = (closed - 121) / 4;
    ProofParameters p = lambda_schedule(k);
    if (p.lambda_k != lambda || p.threshold_log2 != closed || lambda != closed) o.pass = false;
  }
  bool examples = lambda_schedule(2).lambda_k == 1 && lambda_schedule(3).lambda_k == 126 &&
                  lambda_schedule(4).lambda_k == 751;
  o.pass = o.pass && examples;
  o.detail = "k=2..40";
  return o;
}

Outcome geometry_oracle() {
  Outcome o;
  int pairs = 0, mismatches = 0;
  const GenKind kinds[] = {GenKind::RightFlagPolylines, GenKind::Rays, GenKind::UnitSegments};
  for (int t = 0; t < 200; ++t) {
    GenSpec spec{.kind = kinds[t % 3],
                 .n = 2 + t % 9,
                 .seed = 1000 + static_cast<std::uint64_t>(t),
                 .segments_per_curve = kinds[t % 3] == GenKind::RightFlagPolylines ? 1 + t % 3 : 1};
    CurveFamily f = generate(spec);
    auto curves = f.curves();
    for (std::size_t i = 0; i < curves.size(); ++i) {
      for (std::size_t j = i + 1; j < curves.size(); ++j) {
        ++pairs;
        if (crossing_points(curves[i], curves[j]) != oracle::segment_crossings(curves[i], curves[j])) ++mismatches;
      }
    }
    OrderedGraph g = build_intersection_graph(f);
    auto want = oracle::crossing_pairs(curves);
    if (std::vector<Edge>(want.begin(), want.end()) != g.edges()) ++mismatches;
    sanity.check(g);
  }
  o.pass = mismatches == 0;
  o.detail = "200 families, " + std::to_string(pairs) + " pairs, " + std::to_string(mismatches) + " mismatches";
  return o;
}

Outcome exact_chi() {
  Outcome o;
  oracle::Rng rng(3);
  int graphs = 0, mismatches = 0;
  for (int n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 40; ++rep) {
      OrderedGraph g = oracle::random_graph(rng, n, 1 + rep % 9, 10);
      ++graphs;
      ChromaticResult r = chi_exact(g);
      if (r.chi != oracle::brute_chi(g) || !is_proper(g, r.coloring)) ++mismatches;
      sanity.check(g);
    }
  }
  o.pass = mismatches == 0 && graphs >= 300;
  o.detail = std::to_string(graphs) + " graphs, " + std::to_string(mismatches) + " mismatches";
  return o;
}

Outcome distance_lemma() {
  Outcome o;
  oracle::Rng rng(4);
  int violations = 0;
  for (int t = 0; t < 500; ++t) {
    int n = rng.between(2, 20);
    OrderedGraph g = oracle::random_connected_graph(rng, n, rng.between(1, 5), 10);
    int source = g.labels()[static_cast<std::size_t>(rng.below(n))];
    DistanceLayers layers = distance_layers(g, source);
    int chi = chi_exact(g).chi;
    int best = 0;
    for (const auto& layer : layers.layers) best = std::max(best, chi_exact(g.induced(layer)).chi);
    if (best != max_layer_chi(g, layers).chi || 2 * best < chi) ++violations;
    sanity.check(g);
  }
  o.pass = violations == 0;
  o.detail = "500 connected graphs, " + std::to_string(violations) + " violations";
  return o;
}

Outcome alpha_sequences() {
  Outcome o;
  oracle::Rng rng(5);
  int violations = 0;
  for (int t = 0; t < 200; ++t) {
    OrderedGraph g;
    if (t % 2 == 0) {
      g = oracle::random_graph(rng, rng.between(1, 14), rng.between(1, 6), 10);
    } else {
      g = build_intersection_graph(
          generate({.n = rng.between(3, 14), .seed = 500 + static_cast<std::uint64_t>(t), .segments_per_curve = 2}));
    }
    int alpha = 1 + t % 3;
    AlphaSequence s = alpha_sequence(g, alpha);
    auto blocks = s.blocks(g);
    std::vector<int> tiled;
    bool ok = s.breakpoints.front() == g.labels().front() && s.breakpoints.back() == g.labels().back();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      int chi = chi_exact(g.induced(blocks[b])).chi;
      ok = ok && (b + 1 < blocks.size() ? chi == alpha : chi <= alpha);
      tiled.insert(tiled.end(), blocks[b].begin(), blocks[b].end());
    }
    ok = ok && tiled == g.labels();
    if (!ok) ++violations;
    sanity.check(g);
  }
  o.pass = violations == 0;
  o.detail = "200 instances, " + std::to_string(violations) + " violations";
  return o;
}

Outcome gap_subgraphs() {
  Outcome o;
  oracle::Rng rng(6);
  int violations = 0, instances = 0;
  for (int a = 0; a <= 1; ++a) {
    for (int b = 0; b <= 1; ++b) {
      const int threshold = 1 << (a + b + 1);
      for (int rep = 0; rep < 25; ++rep) {
        // A planted clique of size threshold + 1 at random positions.
        int n = threshold + 1 + rng.between(0, 10);
        std::set<int> clique;
        while (static_cast<int>(clique.size()) < threshold + 1) clique.insert(rng.between(1, n));
        std::vector<Edge> edges;
        for (int u = 1; u <= n; ++u) {
          for (int v = u + 1; v <= n; ++v) {
            if ((clique.count(u) && clique.count(v)) || rng.chance(3, 10)) edges.emplace_back(u, v);
          }
        }
        OrderedGraph g = OrderedGraph::with_vertices(n, edges);
        if (chi_exact(g).chi <= threshold) {
          ++violations;
          continue;
        }
        ++instances;
        GapSubgraph gap = extract_gap_subgraph(g, a, b);
        bool ok = chi_exact(gap.h).chi > (1 << a);
        for (auto [u, v] : gap.h.edges()) {
          ok = ok && chi_exact(induced_interval(g, IntervalSpec::open(u, v))).chi >= (1 << b);
        }
        if (!ok) ++violations;
        sanity.check(g);
      }
    }
  }
  o.pass = violations == 0 && instances == 100;
  o.detail = std::to_string(instances) + " graphs, " + std::to_string(violations) + " violations";
  return o;
}

// Seeded simple families with at least one crossing pair.
struct PairInstance {
  CurveFamily family;
  OrderedGraph graph;
  int a = 0, b = 0;
};

std::vector<PairInstance> pair_instances(int count, std::uint64_t first_seed, int n_lo, int n_hi,
                                         const std::function<bool(const PairInstance&)>& accept) {
  std::vector<PairInstance> out;
  oracle::Rng rng(first_seed);
  for (std::uint64_t seed = first_seed; static_cast<int>(out.size()) < count && seed < first_seed + 100000; ++seed) {
    GenSpec spec{.n = rng.between(n_lo, n_hi), .seed = seed, .segments_per_curve = rng.between(1, 3)};
    PairInstance inst{generate(spec), {}, 0, 0};
    inst.graph = build_intersection_graph(inst.family);
    auto edges = inst.graph.edges();
    if (edges.empty()) continue;
    auto [a, b] = edges[static_cast<std::size_t>(rng.below(static_cast<int>(edges.size())))];
    inst.a = a;
    inst.b = b;
    if (accept(inst)) out.push_back(std::move(inst));
  }
  return out;
}

Outcome key_lemma_structure() {
  Outcome o;
  int violations = 0;
  auto instances = pair_instances(200, 7000, 6, 14, [](const PairInstance&) { return true; });
  for (const PairInstance& inst : instances) {
    const OrderedGraph& g = inst.graph;
    KeyLemmaSets s = key_lemma_sets(inst.family, g, inst.a, inst.b);
    const std::vector<int> inside = open_range(g, inst.a, inst.b);
    auto crosses = [&](int i, int j) {
      return !oracle::segment_crossings(inst.family.curve(i), inst.family.curve(j)).empty();
    };
    bool ok = sorted_union(s.I_a, s.D_a) == inside && intersection(s.I_a, s.D_a).empty();
    ok = ok && sorted_union(s.I_b, s.D_b) == inside && intersection(s.I_b, s.D_b).empty();
    ok = ok && s.D_ab == intersection(s.D_a, s.D_b);
    ok = ok && s.D == difference(s.D_ab, sorted_union(s.Da_ab, s.Db_ab));
    for (int i : inside) {
      bool in_ia = std::binary_search(s.I_a.begin(), s.I_a.end(), i);
      bool in_ib = std::binary_search(s.I_b.begin(), s.I_b.end(), i);
      ok = ok && in_ia == crosses(i, inst.a) && in_ib == crosses(i, inst.b);
    }
    ok = ok && isolation_check(g, s).ok;
    if (!ok) ++violations;
    sanity.check(g);
  }
  o.pass = violations == 0 && instances.size() == 200;
  o.detail = std::to_string(instances.size()) + " families, " + std::to_string(violations) + " violations";
  return o;
}

Outcome arc_machinery() {
  Outcome o;
  int violations = 0, ranges = 0;
  auto instances = pair_instances(100, 9000, 8, 14, [](const PairInstance& inst) {
    KeyLemmaSets s = key_lemma_sets(inst.family, inst.graph, inst.a, inst.b);
    return !s.I_a.empty() && !s.Da_ab.empty();
  });
  for (const PairInstance& inst : instances) {
    KeyLemmaSets s = key_lemma_sets(inst.family, inst.graph, inst.a, inst.b);
    ArcAnalysis arcs = grounded_arcs(inst.family, inst.graph, s, AnchorSide::A);
    bool ok = static_cast<int>(arcs.classes.classes.size()) == omega_exact(arcs.arc_graph).omega;
    for (const ArcClassTable& table : arcs.tables) {
      for (const ArcRange& r : table.ranges) {
        ++ranges;
        std::vector<int> met;
        for (std::size_t j = 0; j < table.arcs.size(); ++j) {
          const Arc& arc = *std::find_if(arcs.arcs.begin(), arcs.arcs.end(),
                                         [&](const Arc& x) { return x.parent == table.arcs[j]; });
          if (!oracle::segment_crossings(inst.family.curve(r.curve), arc.geometry).empty()) {
            met.push_back(static_cast<int>(j) + 1);
          }
        }
        ok = ok && met == r.met && r.contiguous() && r.side != ArcSide::Mixed && r.l <= r.u;
      }
    }
    if (!ok) ++violations;
    sanity.check(inst.graph);
    sanity.check(arcs.arc_graph);
  }
  o.pass = violations == 0 && instances.size() == 100;
  o.detail = std::to_string(instances.size()) + " instances, " + std::to_string(ranges) + " u/l ranges, " +
             std::to_string(violations) + " violations";
  return o;
}

Outcome configuration_detection() {
  Outcome o;
  int disagreements = 0, found = 0, planted_missed = 0;
  const ConfigKind kinds[] = {ConfigKind::Type1, ConfigKind::Type2, ConfigKind::Type3, ConfigKind::CrossingClique};
  for (int t = 0; t < 200; ++t) {
    GenSpec spec{.kind = t % 4 == 3 ? GenKind::Rays : GenKind::RightFlagPolylines,
                 .n = 5 + t % 5,
                 .seed = 20000 + static_cast<std::uint64_t>(t),
                 .segments_per_curve = 1 + t % 2};
    CurveFamily f = generate(spec);
    OrderedGraph g = build_intersection_graph(f);
    int k = 2 + t % 2;
    for (ConfigKind kind : kinds) {
      auto got = detect_config(f, g, kind, k);
      auto want = oracle::brute_witness(f, g, kind, k);
      if (got.has_value() != want.has_value()) ++disagreements;
      if (got) {
        ++found;
        if (!verify_witness(f, g, *got) || *got != *want) ++disagreements;
      }
    }
    sanity.check(g);
  }
  for (ConfigKind kind : {ConfigKind::Type1, ConfigKind::Type2, ConfigKind::Type3}) {
    for (int k = 2; k <= 4; ++k) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        PlantedConfiguration p = plant_configuration(kind, k, seed);
        OrderedGraph g = build_intersection_graph(p.family);
        auto got = detect_config(p.family, g, kind, k);
        if (!got || !verify_witness(p.family, g, *got) || !verify_witness(p.family, g, p.witness)) ++planted_missed;
        sanity.check(g);
      }
    }
  }
  o.pass = disagreements == 0 && planted_missed == 0;
  o.detail = "200 instances, " + std::to_string(found) + " witnesses, " + std::to_string(disagreements) +
             " disagreements, " + std::to_string(planted_missed) + " planted misses of 27";
  return o;
}

Outcome short_lemma() {
  Outcome o;
  int instances = 0, falses = 0;
  oracle::Rng rng(10);
  for (std::uint64_t seed = 30000; instances < 500 && seed < 60000; ++seed) {
    GenSpec spec{.kind = seed % 5 == 0 ? GenKind::Rays : GenKind::RightFlagPolylines,
                 .n = rng.between(6, 12),
                 .seed = seed,
                 .segments_per_curve = rng.between(1, 3)};
    CurveFamily f = generate(spec);
    OrderedGraph g = build_intersection_graph(f);
    std::vector<std::pair<std::vector<int>, int>> candidates;
    for (int size = 2; size <= 3; ++size) {
      for (const auto& K : enumerate_cliques(g, g.labels(), size)) {
        for (int j = K.front() + 1; j < K.back(); ++j) {
          bool lonely = std::none_of(K.begin(), K.end(), [&](int v) { return v == j || g.adjacent(v, j); });
          if (lonely) candidates.emplace_back(K, j);
        }
      }
    }
    if (candidates.empty()) continue;
    auto& [K, j] = candidates[static_cast<std::size_t>(rng.below(static_cast<int>(candidates.size())))];
    ++instances;
    try {
      if (!lemma_short_check(f, g, K, j)) ++falses;
    } catch (const Error&) {
      ++falses;
    }
    sanity.check(g);
  }
  o.pass = instances == 500 && falses == 0;
  o.detail = std::to_string(instances) + " instances, " + std::to_string(falses) + " false";
  return o;
}

Outcome product_bound() {
  Outcome o;
  int violations = 0;
  for (int t = 0; t < 100; ++t) {
    GenSpec spec{.n = 4 + t % 7, .seed = 40000 + static_cast<std::uint64_t>(t), .segments_per_curve = 1 + t % 3};
    auto curves = generate_two_sided(spec);
    std::vector<PolyCurve> right, left;
    for (const PolyCurve& c : curves) {
      FlagSplit s = split_at_y_axis(c);
      right.push_back(s.right_flag);
      left.push_back(s.left_flag);
    }
    OrderedGraph whole = build_intersection_graph(curves);
    OrderedGraph gr = build_intersection_graph(CurveFamily::from_curves(right));
    OrderedGraph gl = build_intersection_graph(CurveFamily::from_curves(left));
    if (chi_exact(whole).chi > chi_exact(gr).chi * chi_exact(gl).chi) ++violations;
    for (const OrderedGraph* g : {&whole, &gr, &gl}) sanity.check(*g);
  }
  o.pass = violations == 0;
  o.detail = "100 two-sided families, " + std::to_string(violations) + " violations";
  return o;
}

Outcome global_sanity() {
  Outcome o;
  const GenKind kinds[] = {GenKind::Rays,       GenKind::UnitSegments, GenKind::RightFlagPolylines,
                           GenKind::CrossingFan, GenKind::PlantType1,  GenKind::PlantType2,
                           GenKind::PlantType3,  GenKind::TwoSided};
  int differing = 0;
  for (int t = 0; t < 20; ++t) {
    GenSpec spec{.kind = kinds[t % 8], .n = 10 + t, .k = 2 + t % 3, .seed = 77 + static_cast<std::uint64_t>(t),
                 .segments_per_curve = 1 + t % 3};
    if (write_xmcurves(generate_curves(spec)) != write_xmcurves(generate_curves(spec))) ++differing;
  }
  o.pass = differing == 0 && sanity.violations == 0 && sanity.graphs > 0;
  o.detail = std::to_string(sanity.graphs) + " graphs with omega <= chi_exact <= chi_dsatur checked, " +
             std::to_string(sanity.violations) + " violations; 20 specs, " + std::to_string(differing) +
             " non-deterministic";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 = untimed
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "lambda schedule", 1, lambda_schedule_check},
      {2, "geometry oracle equivalence", 10, geometry_oracle},
      {3, "exact chi vs brute force", 60, exact_chi},
      {4, "distance lemma", 120, distance_lemma},
      {5, "alpha-sequence postconditions", 0, alpha_sequences},
      {6, "gap subgraph lemma", 0, gap_subgraphs},
      {7, "key-lemma set identities and isolation", 0, key_lemma_structure},
      {8, "arc classes and u/l contiguity", 0, arc_machinery},
      {9, "configuration detection", 120, configuration_detection},
      {10, "short lemma", 0, short_lemma},
      {11, "product bound for two-sided families", 0, product_bound},
      {12, "global sanity and determinism", 0, global_sanity},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    if (!o.pass) ++failed;
    std::printf("%s AC%-2d %-40s %s (%.2fs%s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                c.limit_s > 0 ? (", limit " + std::to_string(static_cast<int>(c.limit_s)) + "s").c_str() : "");
  }
  std::printf("%d/12 criteria passed\n", 12 - failed);
  return failed == 0 ? 0 : 1;
}
