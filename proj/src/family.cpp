#include "xmc/family.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "xmc/errors.hpp"

namespace xmc {

std::vector<PolyCurve> order_by_intercept(std::vector<PolyCurve> curves) {
  std::vector<std::pair<Rational, std::size_t>> keyed;
  keyed.reserve(curves.size());
  for (std::size_t i = 0; i < curves.size(); ++i) keyed.emplace_back(axis_intercept(curves[i]), i);
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<PolyCurve> out;
  out.reserve(curves.size());
  for (const auto& [key, index] : keyed) {
    out.push_back(std::move(curves[index]));
    out.back().id = static_cast<int>(out.size());
  }
  return out;
}

CurveFamily CurveFamily::from_curves(std::vector<PolyCurve> curves) {
  for (const PolyCurve& c : curves) {
    try {
      require_x_monotone(c);
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidFamily, std::string("NotXMonotone: ") + e.what());
    }
    if (!c.is_right_flag()) {
      throw Error(ErrorCode::InvalidFamily, "curve " + std::to_string(c.id) + " is not a right-flag curve");
    }
  }
  CurveFamily family;
  family.curves_ = order_by_intercept(std::move(curves));
  ValidationReport report = validate_family(family.curves_);
  if (!report.ok()) {
    const Violation& v = report.violations.front();
    std::string ids;
    for (int id : v.curve_ids) ids += (ids.empty() ? "" : ",") + std::to_string(id);
    throw Error(ErrorCode::InvalidFamily, std::string(to_string(v.kind)) + " on curves " + ids);
  }
  return family;
}

const PolyCurve& CurveFamily::curve(int label) const {
  if (label < 1 || static_cast<std::size_t>(label) > curves_.size()) {
    throw Error(ErrorCode::InvalidArgument, "curve label " + std::to_string(label) + " out of range");
  }
  return curves_[static_cast<std::size_t>(label) - 1];
}

Rational min_right_end_x(const CurveFamily& family, std::span<const int> subset) {
  if (subset.empty()) throw Error(ErrorCode::EmptySubset, "x(K) of an empty set");
  Rational best = family.right_end_x(subset.front());
  for (int label : subset.subspan(1)) best = std::min(best, family.right_end_x(label));
  return best;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::vector<PolyCurve> parse_xmcurves(std::string_view text) {
  std::vector<PolyCurve> curves;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    auto where = [&] { return "line " + std::to_string(line_no) + ": "; };

    if (!header_seen) {
      if (line != "xmcurves 1") throw Error(ErrorCode::ParseError, where() + "expected header 'xmcurves 1'");
      header_seen = true;
      continue;
    }
    if (line.empty() || line.front() == '#') continue;

    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorCode::ParseError, where() + "missing ':'");
    auto head = split_ws(line.substr(0, colon));
    if (head.size() != 2 || head[0] != "curve") throw Error(ErrorCode::ParseError, where() + "expected 'curve <id> :'");
    PolyCurve curve;
    try {
      curve.id = std::stoi(std::string(head[1]));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, where() + "bad curve id");
    }
    for (std::string_view token : split_ws(line.substr(colon + 1))) {
      auto comma = token.find(',');
      if (comma == std::string_view::npos) throw Error(ErrorCode::ParseError, where() + "expected x,y");
      try {
        curve.vertices.push_back(Point{parse_rational(token.substr(0, comma)), parse_rational(token.substr(comma + 1))});
      } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, where() + e.what());
      }
    }
    curves.push_back(std::move(curve));
  }
  if (!header_seen) throw Error(ErrorCode::ParseError, "empty input, expected header 'xmcurves 1'");
  return curves;
}

std::string write_xmcurves(std::span<const PolyCurve> curves, std::string_view comment) {
  std::ostringstream out;
  out << "xmcurves 1\n";
  if (!comment.empty()) out << "# " << comment << "\n";
  for (const PolyCurve& c : curves) {
    out << "curve " << c.id << " :";
    for (const Point& p : c.vertices) out << ' ' << to_string(p);
    out << '\n';
  }
  return out.str();
}

CurveFamily load_family(std::string_view text) { return CurveFamily::from_curves(parse_xmcurves(text)); }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace xmc
