#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xmc/geometry.hpp"

namespace xmc {

/// A validated simple family of right-flag curves, labelled 1..n from bottom
/// to top by y-intercept. Curve ids equal labels.
class CurveFamily {
 public:
  CurveFamily() = default;

  /// Sorts by intercept, relabels 1..n and validates. Throws
  /// Error(InvalidFamily) naming the first violation.
  static CurveFamily from_curves(std::vector<PolyCurve> curves);

  std::size_t size() const { return curves_.size(); }
  bool empty() const { return curves_.empty(); }

  /// 1-based.
  const PolyCurve& curve(int label) const;
  std::span<const PolyCurve> curves() const { return curves_; }

  const Rational& right_end_x(int label) const { return curve(label).right_x(); }

  friend bool operator==(const CurveFamily&, const CurveFamily&) = default;

 private:
  std::vector<PolyCurve> curves_;
};

/// Orders curves bottom-to-top by their height at x = 0 and relabels them
/// 1..n. Works for right-flag and two-sided curves alike.
std::vector<PolyCurve> order_by_intercept(std::vector<PolyCurve> curves);

/// x(K): the least right-endpoint abscissa over the labels in K.
/// Throws Error(EmptySubset) for empty K.
Rational min_right_end_x(const CurveFamily& family, std::span<const int> subset);

// "xmcurves 1" text format.

/// Parses curves as written; ids are taken from the file.
std::vector<PolyCurve> parse_xmcurves(std::string_view text);

/// Writes `curve <id> : x,y ...` lines under the `xmcurves 1` header.
std::string write_xmcurves(std::span<const PolyCurve> curves, std::string_view comment = {});

/// Parse + CurveFamily::from_curves. Right-flag files only.
CurveFamily load_family(std::string_view text);

std::string read_text_file(const std::string& path);

}  // namespace xmc
