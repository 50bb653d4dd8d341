#pragma once

// The space of points of M_s.  A point is stored as its defining triple
// (a, b, c) = (p(e2), p(e2'), p(e1)) subject to a + b = min(0, s*c); all
// evaluation is by closed formula, never by closures.  Rational triples (the
// real extension restricted to the rationals) share every code path.
//
// Also here: the coordinate embeddings of elements and points into Z^2 x Z^2
// (MVec4 / TVec4) and the maps between them, which the algebra layer uses.

#include "polyptych/lattice.hpp"
#include "polyptych/rational.hpp"

#include <array>
#include <optional>
#include <vector>

namespace polyptych {

struct PointTriple {
  Rational a;  // value on e2  = chart-1 (0, 1)
  Rational b;  // value on e2' = chart-1 (0, -1)
  Rational c;  // value on e1  = chart-1 (1, 0)

  friend bool operator==(const PointTriple&, const PointTriple&) = default;
  friend auto operator<=>(const PointTriple& p, const PointTriple& q) {
    if (auto k = p.a.compare(q.a); k != 0) return k < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto k = p.b.compare(q.b); k != 0) return k < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    auto k = p.c.compare(q.c);
    return k < 0    ? std::strong_ordering::less
           : k == 0 ? std::strong_ordering::equal
                    : std::strong_ordering::greater;
  }

  bool is_integral() const { return is_integer(a) && is_integer(b) && is_integer(c); }
};

inline Rational min_zero_times(long long s, const Rational& c) {
  Rational v = c * s;
  return v < 0 ? v : Rational(0);
}

inline bool on_point_locus(ShearParam s, const Rational& a, const Rational& b,
                           const Rational& c) {
  return a + b == min_zero_times(s.s, c);
}

inline PointTriple point_from_triple(ShearParam s, const Rational& a, const Rational& b,
                                     const Rational& c) {
  if (!on_point_locus(s, a, b, c))
    throw InvalidTriple("triple (" + to_string(a) + "," + to_string(b) + "," + to_string(c) +
                        ") violates a+b = min(0, s*c)");
  return {a, b, c};
}

// Evaluation on chart-1 coordinates: c*x + a*y above the axis, c*x - b*y below.
inline Rational evaluate_chart1(const PointTriple& p, const Vec2& v) {
  if (v.y >= 0) return Rational(p.c * v.x + p.a * v.y);
  return Rational(p.c * v.x - p.b * v.y);
}

// Evaluation directly on chart-2 coordinates: -c*x' + a*y' above the axis,
// -c*x' + (s*c - b)*y' below.  Agrees with evaluate_chart1 after mutating.
inline Rational evaluate_chart2(ShearParam s, const PointTriple& p, const Vec2& v) {
  if (v.y >= 0) return Rational(-p.c * v.x + p.a * v.y);
  return Rational(-p.c * v.x + (p.c * s.s - p.b) * v.y);
}

template <class T>
Rational evaluate(ShearParam /*s*/, const PointTriple& p, const BasicElement<T>& m) {
  return evaluate_chart1(p, Vec2{Rational(m.c1.x), Rational(m.c1.y)});
}

// The defining axiom: p(m) + p(m') = min over charts of p(m +_chart m').
template <class T>
bool point_axiom_check(ShearParam s, const PointTriple& p, const BasicElement<T>& m,
                       const BasicElement<T>& m2) {
  Rational lhs = evaluate(s, p, m) + evaluate(s, p, m2);
  Rational rhs1 = evaluate(s, p, add_in_chart(s, ChartId::chart1, m, m2));
  Rational rhs2 = evaluate(s, p, add_in_chart(s, ChartId::chart2, m, m2));
  return lhs == (rhs1 < rhs2 ? rhs1 : rhs2);
}

// Charts on which p restricts to a linear function.  Nonempty for every
// valid triple: chart 1 iff a+b = 0, chart 2 iff a+b = s*c.
inline std::vector<ChartId> linear_charts(ShearParam s, const PointTriple& p) {
  std::vector<ChartId> out;
  if (p.a + p.b == 0) out.push_back(ChartId::chart1);
  if (p.a + p.b == p.c * s.s) out.push_back(ChartId::chart2);
  return out;
}

// The self-dual pairing w_s: (x, -x, y) for y >= 0, (x, s*y - x, y) for y <= 0.
template <class T>
PointTriple dual_pairing_w(ShearParam s, const BasicElement<T>& m) {
  Rational x(m.c1.x), y(m.c1.y);
  if (y >= 0) return {x, -x, y};
  return {x, y * s.s - x, y};
}

template <class T>
bool check_symmetry(ShearParam s, const BasicElement<T>& m, const BasicElement<T>& m2) {
  return evaluate(s, dual_pairing_w(s, m), m2) == evaluate(s, dual_pairing_w(s, m2), m);
}

// ---------------------------------------------------------------------------
// Coordinate embeddings into Z^2 x Z^2.

// Member of the element model: min(w1, w2) = 0 and z1 + z2 = -s*w2.
struct MVec4 {
  Int w1, w2, z1, z2;

  friend bool operator==(const MVec4&, const MVec4&) = default;
};

inline MVec4 mvec4(ShearParam s, Int w1, Int w2, Int z1, Int z2) {
  if (!((w1 < w2 ? w1 : w2) == 0 && z1 + z2 == -s.s * w2))
    throw DomainViolation("vector violates the element-model constraints");
  return {std::move(w1), std::move(w2), std::move(z1), std::move(z2)};
}

// Member of the point model: beta2 = 0 and alpha1 + alpha2 = s*min(beta1, beta2).
struct TVec4 {
  Int alpha1, alpha2, beta1, beta2;

  friend bool operator==(const TVec4&, const TVec4&) = default;
};

inline TVec4 tvec4(ShearParam s, Int alpha1, Int alpha2, Int beta1, Int beta2) {
  Int mn = beta1 < beta2 ? beta1 : beta2;
  if (!(beta2 == 0 && alpha1 + alpha2 == s.s * mn))
    throw DomainViolation("vector violates the point-model constraints");
  return {std::move(alpha1), std::move(alpha2), std::move(beta1), std::move(beta2)};
}

// A 4-vector with two zero slots, as produced by the chart embeddings.
using Vec4 = std::array<Int, 4>;

// theta1: chart 1 -> {(a1,0,0,b2)}, (x,y) |-> (y,0,0,x).
inline Vec4 theta1(const Vec2I& v) { return {v.y, 0, 0, v.x}; }
inline Vec2I theta1_inv(const Vec4& v) {
  if (v[1] != 0 || v[2] != 0) throw DomainViolation("not in the image of theta1");
  return {v[3], v[0]};
}

// theta2: chart 2 -> {(c1,0,d1,0)}, (u,v) |-> (v,0,u,0).
inline Vec4 theta2(const Vec2I& v) { return {v.y, 0, v.x, 0}; }
inline Vec2I theta2_inv(const Vec4& v) {
  if (v[1] != 0 || v[3] != 0) throw DomainViolation("not in the image of theta2");
  return {v[2], v[0]};
}

// psi1 / psi2 project the element model onto the two chart slices.
inline Vec4 psi1(const MVec4& m) { return {m.w1 - m.w2, 0, 0, m.z2}; }
inline Vec4 psi2(const MVec4& m) { return {m.w1 - m.w2, 0, m.z1, 0}; }

inline MVec4 psi1_inv(ShearParam s, const Vec4& v) {
  if (v[1] != 0 || v[2] != 0) throw DomainViolation("not in the image of psi1");
  const Int& a = v[0];
  const Int& b = v[3];
  if (a >= 0) return {a, 0, -b, b};
  return {0, -a, s.s * a - b, b};
}

// Chart-1 coordinates of an element-model vector: (x, y) = (z2, w1 - w2).
inline Vec2I chart1_of_mvec(const MVec4& m) { return {m.z2, m.w1 - m.w2}; }

inline MVec4 mvec_of_chart1(ShearParam s, const Vec2I& v) {
  return psi1_inv(s, theta1(v));
}

// phi: point model -> triple, (a1,a2,b1,0) |-> (a1, a2 - s*b1, -b1).
inline PointTriple phi(ShearParam s, const TVec4& t) {
  return {Rational(t.alpha1), Rational(t.alpha2 - s.s * t.beta1), Rational(-t.beta1)};
}

// upsilon: triple -> point model, (a,b,c) |-> (a, b - s*c, -c, 0).
inline TVec4 upsilon(ShearParam s, const PointTriple& p) {
  if (!p.is_integral()) throw DomainViolation("point-model vectors require integer triples");
  return {numerator(p.a), numerator(p.b) - s.s * numerator(p.c), -numerator(p.c), Int(0)};
}

// The pairing transported to the 4-vector models.
inline TVec4 tilde_w(ShearParam s, const MVec4& m) {
  Int d = m.w1 - m.w2;
  if (d >= 0) return {m.z2, -m.z2 - s.s * d, -d, Int(0)};
  return {m.z2, -m.z2, -d, Int(0)};
}

// Evaluation of a point on an element-model vector; for points of the space
// this equals the inner product against upsilon of the point, restricted to
// the model, and always equals evaluation at the chart-1 image.
inline Rational evaluate_on_mvec(ShearParam /*s*/, const PointTriple& p, const MVec4& m) {
  return evaluate_chart1(p, to_rational(chart1_of_mvec(m)));
}

// Any rational triple on the locus scales by a positive rational to a
// primitive integer triple; scaling preserves the locus equation.
inline PointTriple primitive_triple(const PointTriple& p) {
  if (p.a == 0 && p.b == 0 && p.c == 0) return p;
  Int l = denominator(p.a);
  l = l / gcd_int(l, denominator(p.b)) * denominator(p.b);
  l = l / gcd_int(l, denominator(p.c)) * denominator(p.c);
  Int A = numerator(p.a * l), B = numerator(p.b * l), C = numerator(p.c * l);
  Int g = gcd_int(gcd_int(A, B), C);
  return {Rational(A / g), Rational(B / g), Rational(C / g)};
}

}  // namespace polyptych
