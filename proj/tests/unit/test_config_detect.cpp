#include <doctest.h>

#include "oracles.hpp"
#include "xmc/errors.hpp"

using namespace xmc;

TEST_CASE("witness serialization") {
  ConfigWitness w{ConfigKind::Type3, {1, 2}, {4, 5}, 3};
  CHECK(to_string(w) == "witness type3 k=2 K1=1,2 K2=4,5 q=3");
  CHECK(parse_witness(to_string(w)) == w);
  ConfigWitness c{ConfigKind::CrossingClique, {1, 2, 3}, {}, std::nullopt};
  CHECK(to_string(c) == "witness clique k=3 K1=1,2,3 K2=- q=-");
  CHECK(parse_witness(to_string(c)) == c);
  CHECK_THROWS_AS(parse_witness("witness type1 k=3 K1=1,2 K2=- q=3"), Error);
  CHECK_THROWS_AS(parse_witness("config type1"), Error);
}

TEST_CASE("crossing fan has no type 1 configuration") {
  CurveFamily fan = generate({.kind = GenKind::CrossingFan, .k = 3});
  OrderedGraph g = build_intersection_graph(fan);
  CHECK_FALSE(detect_config(fan, g, ConfigKind::Type1, 2).has_value());
  auto clique = detect_config(fan, g, ConfigKind::CrossingClique, 3);
  REQUIRE(clique);
  CHECK(clique->K1 == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(detect_config(fan, g, ConfigKind::Type1, 1), Error);
}

TEST_CASE("planted configurations are detected and verified") {
  for (auto kind : {ConfigKind::Type1, ConfigKind::Type2, ConfigKind::Type3}) {
    for (int k = 2; k <= 4; ++k) {
      for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      PlantedConfiguration p = plant_configuration(kind, k, seed);
      OrderedGraph g = build_intersection_graph(p.family);
      CHECK(verify_witness(p.family, g, p.witness));
      auto found = detect_config(p.family, g, kind, k);
      REQUIRE(found);
      CHECK(*found == p.witness);
      }
    }
  }
  CHECK(plant_configuration(ConfigKind::Type1, 2, 1).family.size() == 3);
  CHECK(plant_configuration(ConfigKind::Type3, 2, 1).family.size() == 5);
}

TEST_CASE("verify_witness boundaries") {
  // Fan 1,2 crossing; curve 3 disjoint above, right end equal to x(K).
  CurveFamily f = load_family(
      "xmcurves 1\n"
      "curve 1 : 0,0 4,4\n"
      "curve 2 : 0,4 5,0\n"
      "curve 3 : 0,6 4,7\n");
  OrderedGraph g = build_intersection_graph(f);
  ConfigWitness w{ConfigKind::Type1, {1, 2}, {}, 3};
  CHECK_FALSE(verify_witness(f, g, w));
  CHECK_FALSE(detect_config(f, g, ConfigKind::Type1, 2).has_value());

  PlantedConfiguration p = plant_configuration(ConfigKind::Type3, 2, 3);
  OrderedGraph pg = build_intersection_graph(p.family);
  ConfigWitness bad = p.witness;
  bad.K2 = {4, 6};
  CHECK_FALSE(verify_witness(p.family, pg, bad));
  ConfigWitness wrong_kind = p.witness;
  wrong_kind.kind = ConfigKind::Type1;
  CHECK_FALSE(verify_witness(p.family, pg, wrong_kind));
}

TEST_CASE("type 3 q adjacent to K2 fails") {
  // K1 = {1,2}, q = 3, K2 = {4,5}, with 3 crossing 4.
  CurveFamily f = load_family(
      "xmcurves 1\n"
      "curve 1 : 0,0 10,2\n"
      "curve 2 : 0,1 10,-1\n"
      "curve 3 : 0,3 2,6\n"
      "curve 4 : 0,5 10,4\n"
      "curve 5 : 0,7 10,3\n");
  OrderedGraph g = build_intersection_graph(f);
  REQUIRE(g.adjacent(3, 4));
  CHECK_FALSE(verify_witness(f, g, {ConfigKind::Type3, {1, 2}, {4, 5}, 3}));
}

TEST_CASE("lemma_short_check") {
  // Crossing segments with right ends 5 and 6 and a short curve between them.
  CurveFamily f = load_family(
      "xmcurves 1\n"
      "curve 1 : 0,0 6,6\n"
      "curve 2 : 0,1 1,3/2\n"
      "curve 3 : 0,6 5,0\n");
  OrderedGraph g = build_intersection_graph(f);
  std::vector<int> K{1, 3};
  CHECK(lemma_short_check(f, g, K, 2));
  CHECK(f.right_end_x(2) <= 5);

  CurveFamily h = load_family(
      "xmcurves 1\n"
      "curve 1 : 0,0 6,6\n"
      "curve 2 : 0,1 3,4\n"
      "curve 3 : 0,6 5,0\n");
  OrderedGraph hg = build_intersection_graph(h);
  REQUIRE(hg.adjacent(2, 3));
  CHECK_THROWS_AS(lemma_short_check(h, hg, K, 2), Error);
  std::vector<int> not_clique{1, 2};
  CHECK_THROWS_AS(lemma_short_check(f, g, not_clique, 2), Error);
}

TEST_CASE("detector matches the tuple oracle") {
  int found = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    CurveFamily f = generate({.kind = GenKind::RightFlagPolylines, .n = 8, .seed = seed, .segments_per_curve = 2});
    OrderedGraph g = build_intersection_graph(f);
    for (auto kind : {ConfigKind::Type1, ConfigKind::Type2, ConfigKind::Type3, ConfigKind::CrossingClique}) {
      auto got = detect_config(f, g, kind, 2);
      auto want = oracle::brute_witness(f, g, kind, 2);
      CHECK(got == want);
      if (got) {
        CHECK(verify_witness(f, g, *got));
        ++found;
      }
    }
  }
  CHECK(found > 0);
}

TEST_CASE("type 1 monotonicity in k") {
  PlantedConfiguration p = plant_configuration(ConfigKind::Type1, 4, 2);
  OrderedGraph g = build_intersection_graph(p.family);
  for (int k = 2; k <= 4; ++k) CHECK(detect_config(p.family, g, ConfigKind::Type1, k).has_value());
}

TEST_CASE("detector cap") {
  CurveFamily f = generate({.kind = GenKind::RightFlagPolylines, .n = 30, .seed = 1});
  OrderedGraph g = build_intersection_graph(f);
  CHECK_THROWS_AS(detect_config(f, g, ConfigKind::Type1, 2), Error);
  CHECK_NOTHROW(detect_config(f, g, ConfigKind::Type1, 2, DetectOptions{30}));
}
