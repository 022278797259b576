#include "xmc/generators.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "xmc/errors.hpp"

namespace xmc {

std::string_view to_string(GenKind kind) {
  switch (kind) {
    case GenKind::Rays: return "rays";
    case GenKind::UnitSegments: return "unitsegments";
    case GenKind::RightFlagPolylines: return "rightflagpolylines";
    case GenKind::CrossingFan: return "crossingfan";
    case GenKind::PlantType1: return "planttype1";
    case GenKind::PlantType2: return "planttype2";
    case GenKind::PlantType3: return "planttype3";
    case GenKind::TwoSided: return "twosided";
  }
  return "?";
}

GenKind parse_gen_kind(std::string_view text) {
  std::string key;
  for (char c : text) {
    if (c != '-' && c != '_') key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (key == "rays") return GenKind::Rays;
  if (key == "unitsegments") return GenKind::UnitSegments;
  if (key == "rightflagpolylines" || key == "polylines") return GenKind::RightFlagPolylines;
  if (key == "crossingfan" || key == "fan") return GenKind::CrossingFan;
  if (key == "planttype1") return GenKind::PlantType1;
  if (key == "planttype2") return GenKind::PlantType2;
  if (key == "planttype3") return GenKind::PlantType3;
  if (key == "twosided") return GenKind::TwoSided;
  throw Error(ErrorCode::InvalidArgument, "unknown generator kind '" + std::string(text) + "'");
}

namespace {

constexpr long kGrid = 1024;

// Raw mt19937_64 output only: the engine is fully specified by the standard,
// the distributions are not.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  /// Grid-valued rational in [lo, hi].
  Rational between(const Rational& lo, const Rational& hi) {
    return lo + (hi - lo) * ratio(integer(0, kGrid), kGrid);
  }

 private:
  std::mt19937_64 engine_;
};

// Intercept of the i-th (1-based) of n curves: spread over [lo, hi] in
// order with a seeded jitter of at most a quarter spacing.
Rational intercept(Draw& draw, int i, int n, const Rational& lo, const Rational& hi) {
  Rational spacing = (hi - lo) / (n + 1);
  Rational jitter = draw.between(ratio(-1, 4), ratio(1, 4));
  return lo + spacing * (Rational(i) + jitter);
}

// Sorted distinct abscissas strictly inside (lo, hi).
std::vector<Rational> interior_xs(Draw& draw, const Rational& lo, const Rational& hi, int count) {
  std::set<long> picks;
  while (static_cast<int>(picks.size()) < count) picks.insert(draw.integer(1, kGrid - 1));
  std::vector<Rational> out;
  for (long p : picks) out.push_back(lo + (hi - lo) * ratio(p, kGrid));
  return out;
}

// Redraws the highest-numbered offending curve until the family validates.
void repair(std::vector<PolyCurve>& curves, const std::function<PolyCurve(int)>& redraw, ValidationOptions options,
            int max_attempts, int first_redrawable = 1) {
  for (int attempt = 0;; ++attempt) {
    ValidationReport report = validate_family(curves, options);
    if (report.ok()) return;
    if (attempt >= max_attempts) {
      throw Error(ErrorCode::GenerationFailed, "no simple family after " + std::to_string(max_attempts) + " redraws");
    }
    int worst = 0;
    for (const Violation& v : report.violations) {
      for (int id : v.curve_ids) worst = std::max(worst, id);
    }
    if (worst < first_redrawable) {
      throw Error(ErrorCode::GenerationFailed, "violation among curves that cannot be redrawn");
    }
    curves[static_cast<std::size_t>(worst) - 1] = redraw(worst);
  }
}

int attempts_for(const GenSpec& spec) { return spec.max_attempts > 0 ? spec.max_attempts : 50 * spec.n + 100; }

void check_spec(const GenSpec& spec) {
  if (spec.n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (spec.segments_per_curve < 1) throw Error(ErrorCode::InvalidArgument, "segments_per_curve must be at least 1");
  if (spec.coordinate_range <= 0) throw Error(ErrorCode::InvalidArgument, "coordinate_range must be positive");
}

// Near-linear polyline: a line with bounded vertical noise at each vertex.
PolyCurve near_line(Draw& draw, int id, const Rational& x_from, const Rational& x_to, const Rational& y_axis,
                    const Rational& slope, int segments, const Rational& noise, bool axis_vertex) {
  std::vector<Rational> xs{x_from};
  for (Rational& x : interior_xs(draw, x_from, x_to, segments - 1)) xs.push_back(std::move(x));
  xs.push_back(x_to);
  if (axis_vertex && x_from < 0 && x_to > 0 && std::find(xs.begin(), xs.end(), Rational(0)) == xs.end()) {
    xs.push_back(Rational(0));
    std::sort(xs.begin(), xs.end());
  }
  PolyCurve c;
  c.id = id;
  for (const Rational& x : xs) {
    Rational y = y_axis + slope * x;
    if (x != 0) y += draw.between(-noise, noise);
    c.vertices.push_back(Point{x, y});
  }
  return c;
}

std::vector<PolyCurve> right_flag_polylines(const GenSpec& spec, Draw& draw) {
  const Rational& r = spec.coordinate_range;
  const Rational noise = r / (8 * (spec.n + 1));
  auto make = [&](int i) {
    Rational y0 = intercept(draw, i, spec.n, -r / 2, r / 2);
    Rational x_end = draw.between(r / 8, r);
    Rational slope = draw.between(Rational(-1), Rational(1));
    return near_line(draw, i, Rational(0), x_end, y0, slope, spec.segments_per_curve, noise, false);
  };
  std::vector<PolyCurve> curves;
  for (int i = 1; i <= spec.n; ++i) curves.push_back(make(i));
  repair(curves, make, {}, attempts_for(spec));
  return curves;
}

std::vector<PolyCurve> rays(const GenSpec& spec, Draw& draw) {
  const Rational& r = spec.coordinate_range;
  std::vector<Rational> y0(static_cast<std::size_t>(spec.n));
  std::vector<Rational> slope(static_cast<std::size_t>(spec.n));
  auto redraw_line = [&](int i) {
    y0[static_cast<std::size_t>(i) - 1] = intercept(draw, i, spec.n, -r / 2, r / 2);
    slope[static_cast<std::size_t>(i) - 1] = draw.between(Rational(-2), Rational(2));
  };
  // The clip line sits beyond every pairwise crossing of the full rays, so
  // clipping preserves the intersection graph.
  auto clipped = [&] {
    Rational clip = r;
    for (std::size_t i = 0; i < y0.size(); ++i) {
      for (std::size_t j = i + 1; j < y0.size(); ++j) {
        if (slope[i] == slope[j]) continue;
        Rational x = (y0[j] - y0[i]) / (slope[i] - slope[j]);
        clip = std::max(clip, x);
      }
    }
    clip += 1;
    std::vector<PolyCurve> out;
    for (std::size_t i = 0; i < y0.size(); ++i) {
      out.push_back(PolyCurve{static_cast<int>(i) + 1, {Point{Rational(0), y0[i]}, Point{clip, y0[i] + slope[i] * clip}}});
    }
    return out;
  };
  for (int i = 1; i <= spec.n; ++i) redraw_line(i);
  const int max_attempts = attempts_for(spec);
  for (int attempt = 0;; ++attempt) {
    std::vector<PolyCurve> curves = clipped();
    ValidationReport report = validate_family(curves);
    if (report.ok()) return curves;
    if (attempt >= max_attempts) throw Error(ErrorCode::GenerationFailed, "no simple ray family");
    int worst = 0;
    for (const Violation& v : report.violations) {
      for (int id : v.curve_ids) worst = std::max(worst, id);
    }
    redraw_line(worst);
  }
}

std::vector<PolyCurve> unit_segments(const GenSpec& spec, Draw& draw) {
  const Rational& r = spec.coordinate_range;
  auto make = [&](int i) {
    Rational y0 = intercept(draw, i, spec.n, -r / 4, r / 4);
    // Rational point on the unit circle with positive x: ((1-t^2), 2t) / (1+t^2).
    Rational t = draw.between(ratio(-15, 16), ratio(15, 16));
    Rational denom = 1 + t * t;
    Rational dx = (1 - t * t) / denom;
    Rational dy = 2 * t / denom;
    return PolyCurve{i, {Point{Rational(0), y0}, Point{dx, y0 + dy}}};
  };
  std::vector<PolyCurve> curves;
  for (int i = 1; i <= spec.n; ++i) curves.push_back(make(i));
  repair(curves, make, {}, attempts_for(spec));
  return curves;
}

// Lines y = offset + sign * (i - i^2 x) for i = 1..k over [0, width]: each
// pair (i, j) crosses once at x = 1/(i+j), at pairwise distinct points.
std::vector<PolyCurve> fan(int k, const Rational& width, const Rational& offset, int sign, int first_id) {
  std::vector<PolyCurve> out;
  for (int i = 1; i <= k; ++i) {
    Rational y_end = Rational(i) - Rational(i * i) * width;
    out.push_back(PolyCurve{first_id + i - 1,
                            {Point{Rational(0), offset + sign * Rational(i)}, Point{width, offset + sign * y_end}}});
  }
  return out;
}

std::vector<PolyCurve> crossing_fan(const GenSpec& spec, Draw& draw) {
  if (spec.k < 1) throw Error(ErrorCode::InvalidArgument, "fan size must be positive");
  Rational width = 1 + draw.between(Rational(0), Rational(1));
  return fan(spec.k, width, Rational(0), 1, 1);
}

std::vector<PolyCurve> two_sided(const GenSpec& spec, Draw& draw) {
  const Rational& r = spec.coordinate_range;
  const Rational noise = r / (8 * (spec.n + 1));
  auto make = [&](int i) {
    Rational y0 = intercept(draw, i, spec.n, -r / 2, r / 2);
    Rational x_from = -draw.between(r / 8, r);
    Rational x_to = draw.between(r / 8, r);
    Rational slope = draw.between(Rational(-1), Rational(1));
    bool axis_vertex = draw.integer(0, 1) == 1;
    return near_line(draw, i, x_from, x_to, y0, slope, spec.segments_per_curve + 1, noise, axis_vertex);
  };
  std::vector<PolyCurve> curves;
  for (int i = 1; i <= spec.n; ++i) curves.push_back(make(i));
  repair(curves, make, ValidationOptions{.require_right_flag = false}, attempts_for(spec));
  return order_by_intercept(std::move(curves));
}

Rational highest_y(std::span<const PolyCurve> curves) {
  Rational top = curves.front().vertices.front().y;
  for (const PolyCurve& c : curves) {
    for (const Point& p : c.vertices) top = std::max(top, p.y);
  }
  return top;
}

PlantedConfiguration planted(const GenSpec& spec, ConfigKind kind) {
  PlantedConfiguration plant = plant_configuration(kind, spec.k, spec.seed);
  const int base = static_cast<int>(plant.family.size());
  if (spec.n <= base) return plant;

  // Filler lives in a band strictly above the plant, so the plant's
  // adjacencies and labels are untouched.
  Draw draw(spec.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<PolyCurve> curves(plant.family.curves().begin(), plant.family.curves().end());
  const Rational floor = highest_y(curves) + 1;
  const int fillers = spec.n - base;
  const Rational& r = spec.coordinate_range;
  auto make = [&](int id) {
    int i = id - base;
    Rational y0 = floor + r * (Rational(i) + draw.between(ratio(-1, 4), ratio(1, 4))) / (fillers + 1);
    Rational x_end = draw.between(r / 8, r);
    Rational slope = draw.between(Rational(0), Rational(1));
    PolyCurve c = near_line(draw, id, Rational(0), x_end, y0, slope, spec.segments_per_curve, Rational(0), false);
    for (std::size_t v = 1; v < c.vertices.size(); ++v) c.vertices[v].y += draw.between(Rational(0), r / (8 * (fillers + 1)));
    return c;
  };
  for (int id = base + 1; id <= spec.n; ++id) curves.push_back(make(id));
  repair(curves, make, {}, attempts_for(spec), base + 1);
  plant.family = CurveFamily::from_curves(std::move(curves));
  return plant;
}

}  // namespace

std::vector<PolyCurve> generate_curves(const GenSpec& spec) {
  check_spec(spec);
  Draw draw(spec.seed);
  switch (spec.kind) {
    case GenKind::RightFlagPolylines: return right_flag_polylines(spec, draw);
    case GenKind::Rays: return rays(spec, draw);
    case GenKind::UnitSegments: return unit_segments(spec, draw);
    case GenKind::CrossingFan: return crossing_fan(spec, draw);
    case GenKind::TwoSided: return two_sided(spec, draw);
    case GenKind::PlantType1: {
      auto p = planted(spec, ConfigKind::Type1);
      return {p.family.curves().begin(), p.family.curves().end()};
    }
    case GenKind::PlantType2: {
      auto p = planted(spec, ConfigKind::Type2);
      return {p.family.curves().begin(), p.family.curves().end()};
    }
    case GenKind::PlantType3: {
      auto p = planted(spec, ConfigKind::Type3);
      return {p.family.curves().begin(), p.family.curves().end()};
    }
  }
  return {};
}

CurveFamily generate(const GenSpec& spec) {
  if (spec.kind == GenKind::TwoSided) {
    throw Error(ErrorCode::InvalidArgument, "two-sided curves do not form a right-flag family; use generate_two_sided");
  }
  return CurveFamily::from_curves(generate_curves(spec));
}

std::vector<PolyCurve> generate_two_sided(const GenSpec& spec) {
  GenSpec two = spec;
  two.kind = GenKind::TwoSided;
  return generate_curves(two);
}

PlantedConfiguration plant_configuration(ConfigKind kind, int k, std::uint64_t seed) {
  if (k < 2) throw Error(ErrorCode::KTooSmall, "k must be at least 2");
  if (kind == ConfigKind::CrossingClique) {
    throw Error(ErrorCode::InvalidArgument, "plant a crossing clique with the crossingfan generator");
  }
  Draw draw(seed);
  const Rational width = 1 + draw.between(Rational(0), Rational(1));
  const Rational width2 = 1 + draw.between(Rational(0), Rational(1));
  const Rational lonely_end = std::min(width, width2) * draw.between(ratio(1, 8), ratio(7, 8));
  const Rational lonely_rise = draw.between(Rational(0), ratio(1, 2));

  std::vector<PolyCurve> curves = fan(k, width, Rational(0), 1, 1);
  // The fan stays at height <= k; the lonely curve runs between k+1 and k+3/2.
  PolyCurve lonely{k + 1, {Point{Rational(0), Rational(k + 1)}, Point{lonely_end, Rational(k + 1) + lonely_rise}}};
  curves.push_back(lonely);

  ConfigWitness w;
  w.kind = kind;
  if (kind == ConfigKind::Type3) {
    // Second fan rising from heights k+2..2k+1, so it never comes down to the
    // lonely curve.
    std::vector<PolyCurve> upper = fan(k, width2, Rational(2 * k + 2), -1, k + 2);
    curves.insert(curves.end(), upper.begin(), upper.end());
  }
  if (kind == ConfigKind::Type2) {
    for (PolyCurve& c : curves) {
      for (Point& p : c.vertices) p.y = -p.y;
    }
  }
  PlantedConfiguration out{CurveFamily::from_curves(std::move(curves)), {}};

  w.K1.clear();
  switch (kind) {
    case ConfigKind::Type1:
      for (int i = 1; i <= k; ++i) w.K1.push_back(i);
      w.q = k + 1;
      break;
    case ConfigKind::Type2:
      w.q = 1;
      for (int i = 2; i <= k + 1; ++i) w.K1.push_back(i);
      break;
    case ConfigKind::Type3:
      for (int i = 1; i <= k; ++i) w.K1.push_back(i);
      w.q = k + 1;
      for (int i = k + 2; i <= 2 * k + 1; ++i) w.K2.push_back(i);
      break;
    case ConfigKind::CrossingClique:
      break;
  }
  out.witness = std::move(w);
  return out;
}

}  // namespace xmc
