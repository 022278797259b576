#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "xmc/rational.hpp"

namespace xmc {

/// An x-monotone polyline with exact vertices. Right-flag curves start on the
/// y-axis (first vertex has x = 0).
struct PolyCurve {
  int id = 0;
  std::vector<Point> vertices;

  const Point& left() const { return vertices.front(); }
  const Point& right() const { return vertices.back(); }
  const Rational& right_x() const { return vertices.back().x; }

  bool is_right_flag() const { return !vertices.empty() && vertices.front().x == 0; }

  /// Height of the curve at abscissa `x`; `x` must lie in [left().x, right().x].
  Rational y_at(const Rational& x) const;
};

bool operator==(const PolyCurve& lhs, const PolyCurve& rhs);

/// Throws Error(DegenerateCurve) unless the curve has at least two vertices
/// with strictly increasing x.
void require_x_monotone(const PolyCurve& curve);

enum class ContactKind {
  Crossing,       // vertical order strictly swaps
  Tangency,       // isolated touch, same side before and after
  EndpointTouch,  // an endpoint of one curve lies on the other
  Overlap,        // the curves share a segment of positive length
};

struct Contact {
  ContactKind kind;
  Point at;
  bool at_vertex = false;  // the contact point is a vertex of either polyline
};

/// Every common point of the two curves, classified, in increasing x. An
/// overlap is reported once at its leftmost point.
std::vector<Contact> analyze_contacts(const PolyCurve& c1, const PolyCurve& c2);

/// Proper transversal crossings of the two curves, in increasing x.
std::vector<Point> crossing_points(const PolyCurve& c1, const PolyCurve& c2);

/// True iff the curves have at least one proper crossing.
bool curves_cross(const PolyCurve& c1, const PolyCurve& c2);

enum class ViolationKind {
  NotXMonotone,
  NotRightFlag,
  SharedIntercept,
  MultipleCrossings,
  Tangency,
  OverlapOrDegenerate,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<int> curve_ids;
  std::optional<Point> witness;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

struct ValidationOptions {
  /// When false the curves must merely meet the y-axis (two-sided families);
  /// intercepts are then the heights at x = 0.
  bool require_right_flag = true;
};

/// Checks the simple-family assumptions: x-monotone, right-flag (or grounded),
/// distinct intercepts, pairwise at most one proper crossing, no tangency, no
/// endpoint contact, no overlap, no crossing at a vertex, no triple point.
ValidationReport validate_family(std::span<const PolyCurve> curves, ValidationOptions options = {});

/// Height where the curve meets x = 0; the curve must span x = 0.
Rational axis_intercept(const PolyCurve& curve);

struct FlagSplit {
  /// The x < 0 part mirrored by x -> -x, so it is a right-flag curve.
  PolyCurve left_flag;
  PolyCurve right_flag;
  /// False when the axis point was inserted by the split.
  bool axis_point_was_vertex = false;
};

/// Splits a curve with left end x < 0 < right end x at the y-axis.
/// Throws Error(NotCrossingAxis) otherwise.
FlagSplit split_at_y_axis(const PolyCurve& curve);

/// Inverse of split_at_y_axis.
PolyCurve join_flags(const FlagSplit& split);

/// Shifts the vertices of the i-th curve (1-based position) up by i * epsilon.
std::vector<PolyCurve> perturb_vertically(std::span<const PolyCurve> curves, const Rational& epsilon);

}  // namespace xmc
