#include "xmc/rational.hpp"

#include <cctype>

#include "xmc/errors.hpp"

namespace xmc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateCurve: return "DegenerateCurve";
    case ErrorCode::NotCrossingAxis: return "NotCrossingAxis";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::InvalidFamily: return "InvalidFamily";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotAPoset: return "NotAPoset";
    case ErrorCode::KTooSmall: return "KTooSmall";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotCrossing: return "NotCrossing";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Point& p) { return to_string(p.x) + "," + to_string(p.y); }

}  // namespace xmc
