#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xmc/config_detect.hpp"
#include "xmc/errors.hpp"
#include "xmc/generators.hpp"
#include "xmc/proof_lab.hpp"

namespace py = pybind11;
using namespace xmc;

namespace {

py::object fraction(const Rational& value) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(to_string(value));
}

py::list curve_points(const PolyCurve& c) {
  py::list out;
  for (const Point& p : c.vertices) out.append(py::make_tuple(fraction(p.x), fraction(p.y)));
  return out;
}

std::vector<Edge> edges_of(const std::string& text) { return build_intersection_graph(load_family(text)).edges(); }

OrderedGraph graph_of(int n, const std::vector<Edge>& edges) { return OrderedGraph::with_vertices(n, edges); }

}  // namespace

PYBIND11_MODULE(_xmc, m) {
  m.doc() = "Exact tools for simple families of x-monotone curves";

  static py::exception<Error> error(m, "XmcError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<CurveFamily>(m, "CurveFamily")
      .def_static("load", [](const std::string& text) { return load_family(text); }, py::arg("text"))
      .def("__len__", &CurveFamily::size)
      .def("curve", [](const CurveFamily& f, int label) { return curve_points(f.curve(label)); }, py::arg("label"))
      .def("right_end_x", [](const CurveFamily& f, int label) { return fraction(f.right_end_x(label)); })
      .def("to_text", [](const CurveFamily& f) { return write_xmcurves(f.curves()); })
      .def("edges", [](const CurveFamily& f) { return build_intersection_graph(f).edges(); });

  m.def("validate", [](const std::string& text, bool two_sided) {
        std::vector<std::pair<std::string, std::vector<int>>> out;
        auto report = validate_family(parse_xmcurves(text), {.require_right_flag = !two_sided});
        for (const Violation& v : report.violations) out.emplace_back(std::string(to_string(v.kind)), v.curve_ids);
        return out;
      },
      py::arg("text"), py::arg("two_sided") = false, "Violations of the simple-family assumptions; empty when valid.");

  m.def("intersection_edges", &edges_of, py::arg("text"));

  m.def("crossing_points", [](const std::string& text, int i, int j) {
        CurveFamily f = load_family(text);
        py::list out;
        for (const Point& p : crossing_points(f.curve(i), f.curve(j))) out.append(py::make_tuple(fraction(p.x), fraction(p.y)));
        return out;
      },
      py::arg("text"), py::arg("i"), py::arg("j"));

  m.def("chi_exact", [](int n, const std::vector<Edge>& edges, std::uint64_t budget) {
        OrderedGraph g = graph_of(n, edges);
        ChromaticResult r = chi_exact(g, {budget, SolverBudget{}.max_vertices});
        return py::make_tuple(r.chi, r.coloring.by_label(g));
      },
      py::arg("n"), py::arg("edges"), py::arg("budget") = SolverBudget{}.node_limit);

  m.def("chi_heuristic", [](int n, const std::vector<Edge>& edges, const std::string& mode) {
        if (mode != "dsatur" && mode != "firstfit") throw Error(ErrorCode::InvalidArgument, "mode is dsatur or firstfit");
        return chi_heuristic(graph_of(n, edges), mode == "dsatur" ? HeuristicMode::Dsatur : HeuristicMode::FirstFitByOrder).chi;
      },
      py::arg("n"), py::arg("edges"), py::arg("mode") = "dsatur");

  m.def("omega", [](int n, const std::vector<Edge>& edges) {
        CliqueResult r = omega_exact(graph_of(n, edges));
        return py::make_tuple(r.omega, r.vertices);
      },
      py::arg("n"), py::arg("edges"));

  m.def("lambda_schedule", [](int k) { return py::int_(py::str(lambda_schedule(k).lambda_k.get_str())); }, py::arg("k"));

  m.def("alpha_sequence", [](int n, const std::vector<Edge>& edges, int alpha) {
        return alpha_sequence(graph_of(n, edges), alpha).breakpoints;
      },
      py::arg("n"), py::arg("edges"), py::arg("alpha"));

  m.def("gap_subgraph", [](int n, const std::vector<Edge>& edges, int a, int b) {
        return extract_gap_subgraph(graph_of(n, edges), a, b).h.labels();
      },
      py::arg("n"), py::arg("edges"), py::arg("a"), py::arg("b"));

  m.def("key_lemma_sets", [](const std::string& text, int a, int b) {
        CurveFamily f = load_family(text);
        KeyLemmaSets s = key_lemma_sets(f, build_intersection_graph(f), a, b);
        return std::map<std::string, std::vector<int>>{{"I_a", s.I_a},   {"I_b", s.I_b},     {"D_a", s.D_a},
                                                       {"D_b", s.D_b},   {"D_ab", s.D_ab},   {"Da_ab", s.Da_ab},
                                                       {"Db_ab", s.Db_ab}, {"D", s.D}};
      },
      py::arg("text"), py::arg("a"), py::arg("b"));

  m.def("detect", [](const std::string& text, const std::string& kind, int k) -> py::object {
        CurveFamily f = load_family(text);
        auto w = detect_config(f, build_intersection_graph(f), parse_config_kind(kind), k);
        if (!w) return py::none();
        return py::str(to_string(*w));
      },
      py::arg("text"), py::arg("kind"), py::arg("k"));

  m.def("generate", [](const std::string& kind, int n, int k, std::uint64_t seed, int segments) {
        GenSpec spec{.kind = parse_gen_kind(kind), .n = n, .k = k, .seed = seed, .segments_per_curve = segments};
        return write_xmcurves(generate_curves(spec));
      },
      py::arg("kind") = "rightflagpolylines", py::arg("n") = 10, py::arg("k") = 2, py::arg("seed") = 1,
      py::arg("segments") = 1, "A generated family in xmcurves text format.");

  m.def("plant", [](const std::string& kind, int k, std::uint64_t seed) {
        PlantedConfiguration p = plant_configuration(parse_config_kind(kind), k, seed);
        return py::make_tuple(write_xmcurves(p.family.curves()), to_string(p.witness));
      },
      py::arg("kind"), py::arg("k"), py::arg("seed") = 1);

  m.def("split", [](const std::string& text) {
        std::vector<PolyCurve> right, left;
        for (const PolyCurve& c : order_by_intercept(parse_xmcurves(text))) {
          FlagSplit s = split_at_y_axis(c);
          right.push_back(s.right_flag);
          left.push_back(s.left_flag);
        }
        return py::make_tuple(write_xmcurves(right), write_xmcurves(left));
      },
      py::arg("text"), "Right flags and mirrored left flags of a two-sided family.");
}
