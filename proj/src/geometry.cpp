#include "xmc/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "xmc/errors.hpp"

namespace xmc {

Rational PolyCurve::y_at(const Rational& x) const {
  // First vertex with vertex.x >= x.
  auto it = std::lower_bound(vertices.begin(), vertices.end(), x,
                             [](const Point& p, const Rational& v) { return p.x < v; });
  if (it == vertices.end() || (it == vertices.begin() && it->x != x)) {
    throw Error(ErrorCode::InvalidArgument, "abscissa " + to_string(x) + " outside curve " + std::to_string(id));
  }
  if (it->x == x) return it->y;
  const Point& a = *(it - 1);
  const Point& b = *it;
  return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

bool operator==(const PolyCurve& lhs, const PolyCurve& rhs) {
  return lhs.id == rhs.id && lhs.vertices == rhs.vertices;
}

void require_x_monotone(const PolyCurve& curve) {
  if (curve.vertices.size() < 2) {
    throw Error(ErrorCode::DegenerateCurve, "curve " + std::to_string(curve.id) + " has fewer than 2 vertices");
  }
  for (std::size_t i = 1; i < curve.vertices.size(); ++i) {
    if (curve.vertices[i].x <= curve.vertices[i - 1].x) {
      throw Error(ErrorCode::DegenerateCurve, "curve " + std::to_string(curve.id) + " is not strictly x-monotone");
    }
  }
}

std::vector<Contact> analyze_contacts(const PolyCurve& c1, const PolyCurve& c2) {
  require_x_monotone(c1);
  require_x_monotone(c2);

  const Rational lo = std::max(c1.left().x, c2.left().x);
  const Rational hi = std::min(c1.right_x(), c2.right_x());
  std::vector<Contact> contacts;
  if (lo > hi) return contacts;

  std::vector<Rational> xs;
  for (const auto* c : {&c1, &c2}) {
    for (const Point& p : c->vertices) {
      if (p.x >= lo && p.x <= hi) xs.push_back(p.x);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  // Vertical gap between the curves at each breakpoint; linear in between.
  std::vector<Rational> gap;
  gap.reserve(xs.size());
  for (const Rational& x : xs) gap.push_back(c1.y_at(x) - c2.y_at(x));

  const std::size_t last = xs.size() - 1;
  auto point_at = [&](std::size_t i) { return Point{xs[i], c1.y_at(xs[i])}; };

  std::size_t i = 0;
  while (i <= last) {
    if (gap[i] == 0) {
      std::size_t j = i;
      while (j < last && gap[j + 1] == 0) ++j;
      if (j > i) {
        contacts.push_back({ContactKind::Overlap, point_at(i), true});
      } else if (i == 0 || i == last) {
        contacts.push_back({ContactKind::EndpointTouch, point_at(i), true});
      } else {
        bool swaps = sign(gap[i - 1]) != sign(gap[i + 1]);
        contacts.push_back({swaps ? ContactKind::Crossing : ContactKind::Tangency, point_at(i), true});
      }
      i = j + 1;
      continue;
    }
    if (i < last && gap[i + 1] != 0 && sign(gap[i]) != sign(gap[i + 1])) {
      Rational x = xs[i] + (xs[i + 1] - xs[i]) * gap[i] / (gap[i] - gap[i + 1]);
      Rational y = c1.y_at(x);
      contacts.push_back({ContactKind::Crossing, Point{std::move(x), std::move(y)}, false});
    }
    ++i;
  }
  return contacts;
}

std::vector<Point> crossing_points(const PolyCurve& c1, const PolyCurve& c2) {
  std::vector<Point> out;
  for (Contact& c : analyze_contacts(c1, c2)) {
    if (c.kind == ContactKind::Crossing) out.push_back(std::move(c.at));
  }
  return out;
}

bool curves_cross(const PolyCurve& c1, const PolyCurve& c2) { return !crossing_points(c1, c2).empty(); }

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotXMonotone: return "NotXMonotone";
    case ViolationKind::NotRightFlag: return "NotRightFlag";
    case ViolationKind::SharedIntercept: return "SharedIntercept";
    case ViolationKind::MultipleCrossings: return "MultipleCrossings";
    case ViolationKind::Tangency: return "Tangency";
    case ViolationKind::OverlapOrDegenerate: return "OverlapOrDegenerate";
  }
  return "Unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

Rational axis_intercept(const PolyCurve& curve) {
  if (curve.vertices.empty() || curve.left().x > 0 || curve.right_x() < 0) {
    throw Error(ErrorCode::NotCrossingAxis, "curve " + std::to_string(curve.id) + " does not meet the y-axis");
  }
  return curve.y_at(Rational(0));
}

namespace {

bool well_formed(const PolyCurve& c) {
  if (c.vertices.size() < 2) return false;
  for (std::size_t i = 1; i < c.vertices.size(); ++i) {
    if (c.vertices[i].x <= c.vertices[i - 1].x) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate_family(std::span<const PolyCurve> curves, ValidationOptions options) {
  ValidationReport report;
  const std::size_t n = curves.size();
  std::vector<bool> usable(n, false);
  std::vector<std::optional<Rational>> intercept(n);

  for (std::size_t i = 0; i < n; ++i) {
    const PolyCurve& c = curves[i];
    if (!well_formed(c)) {
      std::optional<Point> at;
      if (!c.vertices.empty()) at = c.vertices.front();
      report.violations.push_back({ViolationKind::NotXMonotone, {c.id}, at});
      continue;
    }
    bool grounded = options.require_right_flag ? c.left().x == 0 : (c.left().x <= 0 && c.right_x() >= 0);
    if (!grounded) {
      report.violations.push_back({ViolationKind::NotRightFlag, {c.id}, c.left()});
    } else {
      intercept[i] = c.y_at(Rational(0));
    }
    usable[i] = true;
  }

  std::map<Point, std::set<int>> crossing_owners;
  for (std::size_t i = 0; i < n; ++i) {
    if (!usable[i]) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!usable[j]) continue;
      const PolyCurve& a = curves[i];
      const PolyCurve& b = curves[j];
      std::optional<Point> shared_axis_point;
      if (intercept[i] && intercept[j] && *intercept[i] == *intercept[j]) {
        shared_axis_point = Point{Rational(0), *intercept[i]};
        report.violations.push_back({ViolationKind::SharedIntercept, {a.id, b.id}, shared_axis_point});
      }
      int crossings = 0;
      for (const Contact& contact : analyze_contacts(a, b)) {
        if (shared_axis_point && contact.at == *shared_axis_point) continue;
        switch (contact.kind) {
          case ContactKind::Crossing:
            ++crossings;
            crossing_owners[contact.at].insert({a.id, b.id});
            if (crossings == 2) {
              report.violations.push_back({ViolationKind::MultipleCrossings, {a.id, b.id}, contact.at});
            }
            if (contact.at_vertex) {
              report.violations.push_back({ViolationKind::OverlapOrDegenerate, {a.id, b.id}, contact.at});
            }
            break;
          case ContactKind::Tangency:
            report.violations.push_back({ViolationKind::Tangency, {a.id, b.id}, contact.at});
            break;
          case ContactKind::EndpointTouch:
          case ContactKind::Overlap:
            report.violations.push_back({ViolationKind::OverlapOrDegenerate, {a.id, b.id}, contact.at});
            break;
        }
      }
    }
  }

  // No three curves through one crossing point.
  for (const auto& [at, owners] : crossing_owners) {
    if (owners.size() >= 3) {
      report.violations.push_back({ViolationKind::OverlapOrDegenerate, {owners.begin(), owners.end()}, at});
    }
  }
  return report;
}

FlagSplit split_at_y_axis(const PolyCurve& curve) {
  require_x_monotone(curve);
  if (curve.left().x >= 0 || curve.right_x() <= 0) {
    throw Error(ErrorCode::NotCrossingAxis,
                "curve " + std::to_string(curve.id) + " lies in one closed half-plane");
  }
  const Point axis{Rational(0), curve.y_at(Rational(0))};
  FlagSplit split;
  split.left_flag.id = curve.id;
  split.right_flag.id = curve.id;
  split.left_flag.vertices.push_back(axis);
  split.right_flag.vertices.push_back(axis);
  for (auto it = curve.vertices.rbegin(); it != curve.vertices.rend(); ++it) {
    if (it->x < 0) split.left_flag.vertices.push_back(Point{-it->x, it->y});
  }
  for (const Point& p : curve.vertices) {
    if (p.x > 0) split.right_flag.vertices.push_back(p);
    if (p.x == 0) split.axis_point_was_vertex = true;
  }
  return split;
}

PolyCurve join_flags(const FlagSplit& split) {
  PolyCurve out;
  out.id = split.right_flag.id;
  const auto& left = split.left_flag.vertices;
  for (auto it = left.rbegin(); it + 1 != left.rend(); ++it) out.vertices.push_back(Point{-it->x, it->y});
  auto right = split.right_flag.vertices.begin();
  if (!split.axis_point_was_vertex) ++right;
  out.vertices.insert(out.vertices.end(), right, split.right_flag.vertices.end());
  return out;
}

std::vector<PolyCurve> perturb_vertically(std::span<const PolyCurve> curves, const Rational& epsilon) {
  std::vector<PolyCurve> out(curves.begin(), curves.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    Rational shift = epsilon * static_cast<long>(i + 1);
    for (Point& p : out[i].vertices) p.y += shift;
  }
  return out;
}

}  // namespace xmc
