#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "xmc/config_detect.hpp"

namespace xmc {

enum class GenKind { Rays, UnitSegments, RightFlagPolylines, CrossingFan, PlantType1, PlantType2, PlantType3, TwoSided };

std::string_view to_string(GenKind kind);
/// Case-insensitive: rays, unitsegments, rightflagpolylines (or polylines),
/// crossingfan (or fan), planttype1..3, twosided.
GenKind parse_gen_kind(std::string_view text);

struct GenSpec {
  GenKind kind = GenKind::RightFlagPolylines;
  int n = 10;
  int k = 2;
  std::uint64_t seed = 1;
  Rational coordinate_range = 8;
  int segments_per_curve = 1;
  /// Redraw budget for simplicity repair; 0 picks 50 n + 100.
  int max_attempts = 0;
};

/// Right-flag kinds. Rays are right-flag rays from the y-axis clipped at a
/// vertical line beyond every pairwise crossing; unit segments have squared
/// length exactly 1; CrossingFan has k pairwise crossing segments; the plant
/// kinds pad plant_configuration with n - size filler curves above it.
/// Throws Error(InvalidArgument) for TwoSided and Error(GenerationFailed)
/// when repair runs out of attempts.
CurveFamily generate(const GenSpec& spec);

/// TwoSided: x-monotone curves crossing x = 0, labelled bottom to top by
/// their height on the axis, validated as a two-sided simple family.
std::vector<PolyCurve> generate_two_sided(const GenSpec& spec);

/// Curves of any kind (right-flag families as their curve list).
std::vector<PolyCurve> generate_curves(const GenSpec& spec);

struct PlantedConfiguration {
  CurveFamily family;
  ConfigWitness witness;
};

/// Minimal family realising a configuration. Type1: a fan K of k pairwise
/// crossing segments with a short disjoint curve above; Type2: its vertical
/// mirror (the short curve below); Type3: two fans with the short curve
/// between them. Throws Error(KTooSmall) for k < 2.
PlantedConfiguration plant_configuration(ConfigKind kind, int k, std::uint64_t seed);

}  // namespace xmc
