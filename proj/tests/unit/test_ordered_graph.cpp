#include <doctest.h>

#include "oracles.hpp"
#include "xmc/errors.hpp"
#include "xmc/generators.hpp"

using namespace xmc;

namespace {

// C1 and C5 cross; C2 meets only C1, C4 only C5, C3 only C2.
const char* kFive =
    "xmcurves 1\n"
    "curve 1 : 0,0 10,10\n"
    "curve 2 : 0,2 4,1\n"
    "curve 3 : 0,3 1,3/2\n"
    "curve 4 : 0,4 2,9\n"
    "curve 5 : 0,10 10,0\n";

}  // namespace

TEST_CASE("OrderedGraph basics") {
  std::vector<Edge> edges{{1, 2}, {2, 3}};
  OrderedGraph g({3, 1, 2, 2}, edges);
  CHECK(g.labels() == std::vector<int>{1, 2, 3});
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(1, 3));
  CHECK(g.neighbors(2) == std::vector<int>{1, 3});
  CHECK(g.degree(2) == 2);
  CHECK(g.edge_count() == 2);
  std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(OrderedGraph({1, 2}, loop), Error);
  std::vector<Edge> foreign{{1, 4}};
  CHECK_THROWS_AS(OrderedGraph({1, 2}, foreign), Error);
}

TEST_CASE("build_intersection_graph on the five-curve family") {
  CurveFamily f = load_family(kFive);
  OrderedGraph g = build_intersection_graph(f);
  CHECK(g.edges() == std::vector<Edge>{{1, 2}, {1, 5}, {2, 3}, {4, 5}});
  auto oracle_pairs = oracle::crossing_pairs(f.curves());
  CHECK(std::vector<Edge>(oracle_pairs.begin(), oracle_pairs.end()) == g.edges());
}

TEST_CASE("fans are complete, nested curves are independent") {
  GenSpec spec{.kind = GenKind::CrossingFan, .k = 5};
  CHECK(build_intersection_graph(generate(spec)) == OrderedGraph::complete(5));

  CurveFamily nested = load_family("xmcurves 1\ncurve 1 : 0,0 1,0\ncurve 2 : 0,1 2,1\ncurve 3 : 0,2 3,2\n");
  CHECK(build_intersection_graph(nested).edge_count() == 0);
}

TEST_CASE("induced_interval") {
  OrderedGraph k5 = OrderedGraph::complete(5);
  CHECK(induced_interval(k5, IntervalSpec::closed(1, 5)) == k5);
  CHECK(induced_interval(k5, IntervalSpec::all()) == k5);
  CHECK(induced_interval(k5, IntervalSpec::open(2, 3)).empty());
  OrderedGraph sub = induced_interval(k5, IntervalSpec::open_closed(1, 4));
  CHECK(sub.labels() == std::vector<int>{2, 3, 4});
  CHECK(sub.edge_count() == 3);
  CHECK(induced_interval(k5, IntervalSpec::closed_open(2, 4)).labels() == std::vector<int>{2, 3});
  CHECK(induced_interval(k5, IntervalSpec{std::nullopt, 2, true, false}).labels() == std::vector<int>{1});
}

TEST_CASE("induced keeps labels") {
  std::vector<Edge> edges{{1, 4}, {4, 6}, {2, 3}};
  OrderedGraph g = OrderedGraph::with_vertices(6, edges);
  std::vector<int> keep{4, 6, 1, 9};
  OrderedGraph h = g.induced(keep);
  CHECK(h.labels() == std::vector<int>{1, 4, 6});
  CHECK(h.edges() == std::vector<Edge>{{1, 4}, {4, 6}});
  CHECK(h.position(6) == 2);
}

TEST_CASE("sweep_segment_pairs") {
  SUBCASE("two crossing segments") {
    std::vector<PolyCurve> s{{1, {{0, 0}, {2, 2}}}, {2, {{0, 2}, {2, 0}}}};
    CHECK(sweep_segment_pairs(s) == std::set<Edge>{{1, 2}});
  }
  SUBCASE("ten level segments") {
    std::vector<PolyCurve> s;
    for (int i = 1; i <= 10; ++i) s.push_back({i, {{0, i}, {5, i}}});
    CHECK(sweep_segment_pairs(s).empty());
  }
  SUBCASE("200 unit segments against the quadratic oracle") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      auto curves = generate_curves({.kind = GenKind::UnitSegments, .n = 200, .seed = seed, .coordinate_range = 20});
      auto pairs = sweep_segment_pairs(curves);
      CHECK(pairs == oracle::crossing_pairs(curves));
      CHECK(pairs == pairwise_crossing_pairs(curves));
    }
  }
  SUBCASE("rays") {
    auto curves = generate_curves({.kind = GenKind::Rays, .n = 40, .seed = 3});
    CHECK(sweep_segment_pairs(curves) == oracle::crossing_pairs(curves));
  }
}

TEST_CASE("exports") {
  std::vector<Edge> edges{{1, 2}, {1, 3}};
  OrderedGraph g = OrderedGraph::with_vertices(3, edges);
  CHECK(to_adjacency_list(g) == "1: 2 3\n2: 1\n3: 1\n");
  std::string dot = to_dot(g);
  CHECK(dot.find("graph G {") != std::string::npos);
  CHECK(dot.find("1 -- 2") != std::string::npos);
}
