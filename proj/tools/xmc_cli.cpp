// xmcurves: command-line front end for the x-monotone curve toolkit.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xmc/config_detect.hpp"
#include "xmc/errors.hpp"
#include "xmc/generators.hpp"
#include "xmc/proof_lab.hpp"

using namespace xmc;

namespace {

std::string join(const std::vector<int>& values, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<int> parse_ids(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad index '" + item + "'");
    }
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

struct Options {
  std::string file;
  bool exact = false, dsatur = false, firstfit = false;
  int alpha = 1;
  int a = 0, b = 0;
  std::string side = "a";
  std::string type = "1";
  int k = 2;
  std::string kind = "rightflagpolylines";
  int n = 10;
  int trials = 10;
  std::uint64_t seed = 1;
  std::uint64_t budget = SolverBudget{}.node_limit;
  int max_vertices = SolverBudget{}.max_vertices;
  int detect_cap = DetectOptions{}.max_vertices;
  std::string format = "adj";
  int source = 1;
  std::string clique;
  int j = 0;
  std::string range = "8";
  int segments = 1;
  int attempts = 0;
  std::string out_right, out_left;
  bool two_sided = false;
  bool timing = false;
};

SolverBudget budget_of(const Options& o) { return SolverBudget{o.budget, o.max_vertices}; }

CurveFamily family_of(const Options& o) { return load_family(read_text_file(o.file)); }

int cmd_validate(const Options& o) {
  std::vector<PolyCurve> curves = parse_xmcurves(read_text_file(o.file));
  ValidationReport report = validate_family(curves, ValidationOptions{.require_right_flag = !o.two_sided});
  if (report.ok()) {
    std::cout << "ok n=" << curves.size() << "\n";
    return 0;
  }
  for (const Violation& v : report.violations) {
    std::cout << "violation " << to_string(v.kind) << " curves=" << join(v.curve_ids, ",");
    if (v.witness) std::cout << " at=" << to_string(*v.witness);
    std::cout << "\n";
  }
  std::cerr << "error: family is not simple (" << to_string(report.violations.front().kind) << ")\n";
  return 1;
}

int cmd_graph(const Options& o) {
  OrderedGraph g = build_intersection_graph(family_of(o));
  if (o.format == "adj") {
    std::cout << to_adjacency_list(g);
  } else if (o.format == "dot") {
    std::cout << to_dot(g);
  } else if (o.format == "tsv") {
    std::cout << "u\tv\n";
    for (auto [u, v] : g.edges()) std::cout << u << "\t" << v << "\n";
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown format '" + o.format + "'");
  }
  return 0;
}

int cmd_chi(const Options& o) {
  OrderedGraph g = build_intersection_graph(family_of(o));
  ChromaticResult r;
  if (o.dsatur) {
    r = chi_heuristic(g, HeuristicMode::Dsatur);
  } else if (o.firstfit) {
    r = chi_heuristic(g, HeuristicMode::FirstFitByOrder);
  } else {
    r = chi_exact(g, budget_of(o));
  }
  std::cout << "chi " << r.chi << "\n";
  for (auto [label, color] : r.coloring.by_label(g)) std::cout << "color " << label << " " << color << "\n";
  return 0;
}

int cmd_omega(const Options& o) {
  CliqueResult r = omega_exact(build_intersection_graph(family_of(o)));
  std::cout << "omega " << r.omega << "\nclique " << join(r.vertices) << "\n";
  return 0;
}

int cmd_layers(const Options& o) {
  OrderedGraph g = build_intersection_graph(family_of(o));
  DistanceLayers layers = distance_layers(g, o.source);
  SolverBudget budget = budget_of(o);
  for (std::size_t d = 0; d < layers.layers.size(); ++d) {
    int chi = chromatic_number(g.induced(layers.layers[d]), budget);
    std::cout << "layer " << d << " chi=" << chi << " : " << join(layers.layers[d]) << "\n";
  }
  std::vector<int> component;
  for (const auto& layer : layers.layers) component.insert(component.end(), layer.begin(), layer.end());
  LayerChi best = max_layer_chi(g, layers, budget);
  int chi_component = chromatic_number(g.induced(component), budget);
  std::cout << "max_layer " << best.layer << " chi=" << best.chi << "\n";
  std::cout << "component_chi " << chi_component << "\n";
  return 0;
}

int cmd_alphaseq(const Options& o) {
  OrderedGraph g = build_intersection_graph(family_of(o));
  AlphaSequence seq = alpha_sequence(g, o.alpha, budget_of(o));
  std::cout << "alphaseq alpha=" << seq.alpha << " m=" << seq.m() << "\n";
  std::cout << "breakpoints " << join(seq.breakpoints) << "\n";
  auto blocks = seq.blocks(g);
  for (std::size_t t = 0; t < blocks.size(); ++t) {
    std::cout << "block " << t + 1 << " chi=" << chromatic_number(g.induced(blocks[t]), budget_of(o)) << " : "
              << join(blocks[t]) << "\n";
  }
  return 0;
}

int cmd_gapsub(const Options& o) {
  OrderedGraph g = build_intersection_graph(family_of(o));
  GapSubgraph gap = extract_gap_subgraph(g, o.a, o.b, budget_of(o));
  std::cout << "gapsub a=" << o.a << " b=" << o.b << " class=" << gap.color_class
            << " blocks=" << (gap.even_blocks ? "even" : "odd") << " chi_h=" << gap.chi_h << "\n";
  std::cout << "breakpoints " << join(gap.sequence.breakpoints) << "\n";
  std::cout << "vertices " << join(gap.h.labels()) << "\n";
  return 0;
}

void print_bound(int k, long chi_f_ab) {
  ProofParameters params = lambda_schedule(k);
  KeyLemmaBound bound = key_lemma_bound(params, chi_f_ab);
  std::cout << "lambda k=" << k << " lambda_k=" << params.lambda_k.get_str() << "\n";
  std::cout << "bound chi_f_ab=" << chi_f_ab << " vacuous=" << (bound.vacuous ? "true" : "false")
            << " with_k_factor=" << (bound.with_k_factor < 0 ? "negative" : bound.with_k_factor.get_str())
            << " without_k_factor=" << (bound.without_k_factor < 0 ? "negative" : bound.without_k_factor.get_str())
            << "\n";
}

int cmd_keylemma(const Options& o) {
  CurveFamily family = family_of(o);
  OrderedGraph g = build_intersection_graph(family);
  KeyLemmaSets sets = key_lemma_sets(family, g, o.a, o.b);
  std::cout << key_lemma_trace(sets);
  IsolationResult iso = isolation_check(g, sets);
  std::cout << "isolation " << (iso.ok ? "ok" : "violated");
  if (iso.violator) std::cout << " curve=" << *iso.violator;
  std::cout << "\n";
  int chi_f_ab = chromatic_number(induced_interval(g, IntervalSpec::open(o.a, o.b)), budget_of(o));
  int chi_d = chromatic_number(g.induced(sets.D), budget_of(o));
  std::cout << "chi F(a,b)=" << chi_f_ab << " D=" << chi_d << "\n";
  print_bound(o.k, chi_f_ab);
  return iso.ok ? 0 : 1;
}

int cmd_arcs(const Options& o) {
  CurveFamily family = family_of(o);
  OrderedGraph g = build_intersection_graph(family);
  KeyLemmaSets sets = key_lemma_sets(family, g, o.a, o.b);
  AnchorSide side;
  if (o.side == "a") {
    side = AnchorSide::A;
  } else if (o.side == "b") {
    side = AnchorSide::B;
  } else {
    throw Error(ErrorCode::InvalidArgument, "side must be a or b");
  }
  ArcAnalysis arcs = grounded_arcs(family, g, sets, side, budget_of(o));
  std::cout << key_lemma_trace(sets, &arcs);
  return 0;
}

int cmd_detect(const Options& o) {
  CurveFamily family = family_of(o);
  OrderedGraph g = build_intersection_graph(family);
  auto w = detect_config(family, g, parse_config_kind(o.type), o.k, DetectOptions{o.detect_cap});
  std::cout << (w ? to_string(*w) : std::string("none")) << "\n";
  return 0;
}

int cmd_shortcheck(const Options& o) {
  CurveFamily family = family_of(o);
  OrderedGraph g = build_intersection_graph(family);
  std::vector<int> K = parse_ids(o.clique);
  bool holds = lemma_short_check(family, g, K, o.j);
  std::cout << "short " << (holds ? "true" : "false") << " x_j=" << to_string(family.right_end_x(o.j))
            << " x_K=" << to_string(min_right_end_x(family, K)) << "\n";
  return holds ? 0 : 1;
}

GenSpec spec_of(const Options& o) {
  GenSpec spec;
  spec.kind = parse_gen_kind(o.kind);
  spec.n = o.n;
  spec.k = o.k;
  spec.seed = o.seed;
  spec.coordinate_range = parse_rational(o.range);
  spec.segments_per_curve = o.segments;
  spec.max_attempts = o.attempts;
  return spec;
}

int cmd_gen(const Options& o) {
  GenSpec spec = spec_of(o);
  std::vector<PolyCurve> curves = generate_curves(spec);
  std::ostringstream comment;
  comment << "kind=" << to_string(spec.kind) << " n=" << curves.size() << " seed=" << spec.seed;
  std::cout << write_xmcurves(curves, comment.str());
  return 0;
}

int cmd_plant(const Options& o) {
  PlantedConfiguration plant = plant_configuration(parse_config_kind(o.type), o.k, o.seed);
  std::cout << write_xmcurves(plant.family.curves(), to_string(plant.witness));
  return 0;
}

int cmd_split(const Options& o) {
  std::vector<PolyCurve> curves = order_by_intercept(parse_xmcurves(read_text_file(o.file)));
  ValidationReport report = validate_family(curves, ValidationOptions{.require_right_flag = false});
  if (!report.ok()) throw Error(ErrorCode::InvalidFamily, std::string(to_string(report.violations.front().kind)));
  std::vector<PolyCurve> right, left;
  for (const PolyCurve& c : curves) {
    FlagSplit s = split_at_y_axis(c);
    right.push_back(s.right_flag);
    left.push_back(s.left_flag);
  }
  CurveFamily right_family = CurveFamily::from_curves(right);
  CurveFamily left_family = CurveFamily::from_curves(left);
  SolverBudget budget = budget_of(o);
  int chi = chromatic_number(build_intersection_graph(curves), budget);
  int chi_right = chromatic_number(build_intersection_graph(right_family), budget);
  int chi_left = chromatic_number(build_intersection_graph(left_family), budget);
  std::cout << "split n=" << curves.size() << " chi=" << chi << " chi_right=" << chi_right
            << " chi_left=" << chi_left << " product=" << chi_right * chi_left << "\n";
  if (!o.out_right.empty()) write_file(o.out_right, write_xmcurves(right_family.curves(), "right flags"));
  if (!o.out_left.empty()) write_file(o.out_left, write_xmcurves(left_family.curves(), "left flags, mirrored"));
  return chi <= chi_right * chi_left ? 0 : 1;
}

int cmd_experiment(const Options& o) {
  GenSpec base = spec_of(o);
  SolverBudget budget = budget_of(o);
  std::cout << "id\tn\tkind\tseed\tomega\tchi_exact\tchi_dsatur\tchi_firstfit\tmax_layer_chi\twall_time_ms\tstatus\n";
  std::map<int, int> max_chi_by_omega;
  int partial = 0;
  for (int t = 0; t < o.trials; ++t) {
    GenSpec spec = base;
    spec.seed = base.seed + static_cast<std::uint64_t>(t);
    auto start = std::chrono::steady_clock::now();
    std::vector<PolyCurve> curves = generate_curves(spec);
    OrderedGraph g = build_intersection_graph(curves);
    int omega = omega_exact(g).omega;
    int dsatur = chi_heuristic(g, HeuristicMode::Dsatur).chi;
    int firstfit = chi_heuristic(g, HeuristicMode::FirstFitByOrder).chi;
    std::string exact = "", layer = "", status = "ok";
    try {
      int chi = chromatic_number(g, budget);
      exact = std::to_string(chi);
      int& best = max_chi_by_omega[omega];
      best = std::max(best, chi);
      if (!g.empty()) layer = std::to_string(max_layer_chi(g, distance_layers(g, g.labels().front()), budget).chi);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      status = "budget_exceeded";
      ++partial;
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream time;
    if (o.timing) {
      time.precision(3);
      time << std::fixed << ms;
    } else {
      time << "-";
    }
    std::cout << t + 1 << "\t" << curves.size() << "\t" << to_string(spec.kind) << "\t" << spec.seed << "\t" << omega
              << "\t" << exact << "\t" << dsatur << "\t" << firstfit << "\t" << layer << "\t" << time.str() << "\t"
              << status << "\n";
  }
  for (auto [omega, chi] : max_chi_by_omega) std::cout << "# omega=" << omega << " max_chi=" << chi << "\n";
  std::cout << "# rows=" << o.trials << " budget_exceeded=" << partial << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for simple families of x-monotone curves"};
  app.require_subcommand(1);
  Options o;

  auto file = [&](CLI::App* sub) { sub->add_option("--file", o.file, "curve family in xmcurves format")->required(); };
  auto budget = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "exact-solver node limit");
    sub->add_option("--max-vertices", o.max_vertices, "exact-solver vertex cap");
  };
  auto pair = [&](CLI::App* sub) {
    sub->add_option("--a", o.a, "lower curve of the crossing pair")->required();
    sub->add_option("--b", o.b, "upper curve of the crossing pair")->required();
  };
  auto generator = [&](CLI::App* sub) {
    sub->add_option("--kind", o.kind, "rays|unitsegments|rightflagpolylines|crossingfan|planttype1..3|twosided");
    sub->add_option("--n", o.n, "number of curves");
    sub->add_option("--k", o.k, "fan or configuration size");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--range", o.range, "coordinate range");
    sub->add_option("--segments", o.segments, "segments per curve");
    sub->add_option("--attempts", o.attempts, "repair budget (0 = default)");
  };

  std::map<CLI::App*, int (*)(const Options&)> handlers;

  auto* validate = app.add_subcommand("validate", "check the simple-family assumptions");
  file(validate);
  validate->add_flag("--two-sided", o.two_sided, "curves need only meet the y-axis");
  handlers[validate] = cmd_validate;

  auto* graph = app.add_subcommand("graph", "intersection graph");
  file(graph);
  graph->add_option("--format", o.format, "adj|dot|tsv");
  handlers[graph] = cmd_graph;

  auto* chi = app.add_subcommand("chi", "chromatic number");
  file(chi);
  auto* exact = chi->add_flag("--exact", o.exact, "branch and bound (default)");
  auto* dsatur = chi->add_flag("--dsatur", o.dsatur, "DSATUR heuristic");
  auto* firstfit = chi->add_flag("--firstfit", o.firstfit, "first fit in index order");
  exact->excludes(dsatur)->excludes(firstfit);
  dsatur->excludes(firstfit);
  budget(chi);
  handlers[chi] = cmd_chi;

  auto* omega = app.add_subcommand("omega", "clique number");
  file(omega);
  handlers[omega] = cmd_omega;

  auto* layers = app.add_subcommand("layers", "BFS distance layers and their chromatic numbers");
  file(layers);
  layers->add_option("--source", o.source, "source curve");
  budget(layers);
  handlers[layers] = cmd_layers;

  auto* alphaseq = app.add_subcommand("alphaseq", "greedy alpha-sequence");
  file(alphaseq);
  alphaseq->add_option("--alpha", o.alpha, "block chromatic number")->required();
  budget(alphaseq);
  handlers[alphaseq] = cmd_alphaseq;

  auto* gapsub = app.add_subcommand("gapsub", "gap subgraph");
  file(gapsub);
  gapsub->add_option("--a", o.a, "chi(H) > 2^a")->required();
  gapsub->add_option("--b", o.b, "edge gap chi >= 2^b")->required();
  budget(gapsub);
  handlers[gapsub] = cmd_gapsub;

  auto* keylemma = app.add_subcommand("keylemma", "key-lemma sets for a crossing pair");
  file(keylemma);
  pair(keylemma);
  keylemma->add_option("--k", o.k, "schedule index for the bound");
  budget(keylemma);
  handlers[keylemma] = cmd_keylemma;

  auto* arcs = app.add_subcommand("arcs", "grounded arcs, classes and u/l tables");
  file(arcs);
  pair(arcs);
  arcs->add_option("--side", o.side, "a|b");
  budget(arcs);
  handlers[arcs] = cmd_arcs;

  auto* detect = app.add_subcommand("detect", "find a configuration");
  file(detect);
  detect->add_option("--type", o.type, "1|2|3|clique");
  detect->add_option("--k", o.k, "clique size");
  detect->add_option("--cap", o.detect_cap, "maximum family size");
  handlers[detect] = cmd_detect;

  auto* shortcheck = app.add_subcommand("shortcheck", "x(C_j) <= x(K)");
  file(shortcheck);
  shortcheck->add_option("--clique", o.clique, "comma-separated clique K")->required();
  shortcheck->add_option("--j", o.j, "curve between min(K) and max(K)")->required();
  handlers[shortcheck] = cmd_shortcheck;

  auto* gen = app.add_subcommand("gen", "generate a family");
  generator(gen);
  handlers[gen] = cmd_gen;

  auto* plant = app.add_subcommand("plant", "plant a configuration");
  plant->add_option("--type", o.type, "1|2|3");
  plant->add_option("--k", o.k, "clique size");
  plant->add_option("--seed", o.seed, "random seed");
  handlers[plant] = cmd_plant;

  auto* split = app.add_subcommand("split", "split two-sided curves at the y-axis");
  file(split);
  split->add_option("--out-right", o.out_right, "write the right flags here");
  split->add_option("--out-left", o.out_left, "write the mirrored left flags here");
  budget(split);
  handlers[split] = cmd_split;

  auto* experiment = app.add_subcommand("experiment", "chi versus omega table");
  generator(experiment);
  experiment->add_option("--trials", o.trials, "number of instances");
  experiment->add_flag("--timing", o.timing, "fill in wall_time_ms");
  budget(experiment);
  handlers[experiment] = cmd_experiment;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    for (auto [sub, handler] : handlers) {
      if (sub->parsed()) return handler(o);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::BudgetExceeded ? 2 : 1;
  }
  return 1;
}
