#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace xmc {

/// Exact rational in lowest terms with a positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses `p` or `p/q` (optional leading sign). Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& value);

/// p/q in lowest terms.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline int sign(const Rational& value) { return sgn(value); }

struct Point {
  Rational x;
  Rational y;
};

inline bool operator==(const Point& lhs, const Point& rhs) {
  return lhs.x == rhs.x && lhs.y == rhs.y;
}

/// Lexicographic (x, then y).
inline std::strong_ordering operator<=>(const Point& lhs, const Point& rhs) {
  if (int c = cmp(lhs.x, rhs.x); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = cmp(lhs.y, rhs.y);
  if (c == 0) return std::strong_ordering::equal;
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string to_string(const Point& p);

}  // namespace xmc
