#pragma once

// Exact arithmetic primitives shared by every module: arbitrary-precision
// rationals, 2-vectors over the integers and rationals, and the small
// number-theoretic helpers (primitive vectors, floor/ceil) the polyhedral
// code relies on. No floating point appears anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyptych {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidTriple : Error {
  using Error::Error;
};
struct DomainViolation : Error {
  using Error::Error;
};
struct NotCompact : Error {
  using Error::Error;
};
struct OriginNotInterior : Error {
  using Error::Error;
};
struct EmptyInput : Error {
  using Error::Error;
};
struct ZeroElement : Error {
  using Error::Error;
};
struct NotIntegral : Error {
  using Error::Error;
};
struct DegenerateInput : Error {
  using Error::Error;
};
struct UnboundSymbol : Error {
  using Error::Error;
};
struct ParseError : Error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& what)
      : Error(what), position(pos) {}
};

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Largest integer <= q.
inline Int floor_int(const Rational& q) {
  Int n = numerator(q), d = denominator(q);
  Int t = n / d;
  if (n < 0 && t * d != n) --t;
  return t;
}

inline Int ceil_int(const Rational& q) { return -floor_int(-q); }

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const Int& n) { return n.sign(); }

// Canonical text form: "n" when integral, "p/q" otherwise (q > 0, reduced).
inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "n" or "p/q" with optional sign.
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in rational literal: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw Error("malformed rational literal: " + text);
  }
}

template <class T>
struct Vec2T {
  T x{};
  T y{};

  friend bool operator==(const Vec2T&, const Vec2T&) = default;
  friend auto operator<=>(const Vec2T& a, const Vec2T& b) {
    if (auto c = a.x.compare(b.x); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    auto c = a.y.compare(b.y);
    return c < 0    ? std::strong_ordering::less
           : c == 0 ? std::strong_ordering::equal
                    : std::strong_ordering::greater;
  }

  Vec2T operator+(const Vec2T& o) const { return {x + o.x, y + o.y}; }
  Vec2T operator-(const Vec2T& o) const { return {x - o.x, y - o.y}; }
  Vec2T operator-() const { return {-x, -y}; }
  Vec2T operator*(const T& k) const { return {x * k, y * k}; }
};

using Vec2 = Vec2T<Rational>;
using Vec2I = Vec2T<Int>;

inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Int dot(const Vec2I& a, const Vec2I& b) { return a.x * b.x + a.y * b.y; }
inline Int cross(const Vec2I& a, const Vec2I& b) { return a.x * b.y - a.y * b.x; }

inline Vec2 to_rational(const Vec2I& v) { return {Rational(v.x), Rational(v.y)}; }

inline Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Scales a nonzero rational direction to the primitive integer vector on the
// same ray. Direction (not just the spanned line) is preserved.
inline Vec2I primitive(const Vec2& v) {
  if (v.x == 0 && v.y == 0) throw Error("primitive: zero vector");
  Int a = numerator(v.x) * denominator(v.y);
  Int b = numerator(v.y) * denominator(v.x);
  Int g = gcd_int(a, b);
  return {a / g, b / g};
}

inline Vec2I primitive(const Vec2I& v) {
  if (v.x == 0 && v.y == 0) throw Error("primitive: zero vector");
  Int g = gcd_int(v.x, v.y);
  return {v.x / g, v.y / g};
}

// Strict weak order on nonzero directions by counterclockwise angle starting
// at (1,0). Exact: half-plane class first, cross product within a half.
inline bool angle_less(const Vec2I& a, const Vec2I& b) {
  auto half = [](const Vec2I& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

}  // namespace polyptych
