#pragma once

// The detropicalization A_s = K[x1,x2,y1^,y2^] / (x1 x2 - y1^s - y2^s, y2 - 1)
// and its Laurent extension by t-variables, in the canonical monomial basis
// x1^w1 x2^w2 y1^z1 y2^z2 with min(w1,w2) = 0 and the derived exponent
// z2 = -z1 - s*w2.  The y2 exponent is never stored.
//
// Products reduce x1 x2 to the binomial expansion of y1^s + y2^s; each
// rewriting step strictly decreases min(w1, w2), so normal forms are unique.
// The valuation sends a basis monomial to a single piece of the point
// semialgebra and a sum to the min of its terms' pieces.

#include "polyptych/lattice.hpp"
#include "polyptych/plconvex.hpp"
#include "polyptych/plfunction.hpp"
#include "polyptych/points.hpp"
#include "polyptych/rational.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <vector>

namespace polyptych {

struct Monomial {
  long long w1 = 0, w2 = 0, z1 = 0;
  std::vector<long long> t;  // Laurent exponents of t1..tl, trailing zeros trimmed

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  bool valid() const { return std::min(w1, w2) == 0; }
  long long z2(ShearParam s) const { return -z1 - s.s * w2; }
};

inline Monomial monomial(long long w1, long long w2, long long z1,
                         std::vector<long long> t = {}) {
  while (!t.empty() && t.back() == 0) t.pop_back();
  Monomial m{w1, w2, z1, std::move(t)};
  if (!m.valid()) throw DomainViolation("monomial exponents must satisfy min(w1,w2) = 0");
  return m;
}

inline MVec4 mvec_of_monomial(ShearParam s, const Monomial& m) {
  return {Int(m.w1), Int(m.w2), Int(m.z1), Int(m.z2(s))};
}

// Chart-1 coordinates of the exponent: (x, y) = (z2, w1 - w2).
inline Element element_of_monomial(ShearParam s, const Monomial& m) {
  return {Vec2I{Int(m.z2(s)), Int(m.w1 - m.w2)}};
}

struct AlgebraElement {
  std::map<Monomial, Rational> terms;  // no zero coefficients

  bool is_zero() const { return terms.empty(); }

  AlgebraElement& add_term(const Monomial& m, const Rational& coeff) {
    if (coeff == 0) return *this;
    auto [it, inserted] = terms.emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms.erase(it);
    }
    return *this;
  }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

inline AlgebraElement algebra_zero() { return {}; }
inline AlgebraElement algebra_one() { return AlgebraElement{}.add_term(monomial(0, 0, 0), 1); }
inline AlgebraElement algebra_monomial(const Monomial& m, const Rational& c = 1) {
  return AlgebraElement{}.add_term(m, c);
}

inline AlgebraElement add(const AlgebraElement& f, const AlgebraElement& g) {
  AlgebraElement out = f;
  for (const auto& [m, c] : g.terms) out.add_term(m, c);
  return out;
}

inline AlgebraElement scale(const AlgebraElement& f, const Rational& c) {
  AlgebraElement out;
  if (c == 0) return out;
  for (const auto& [m, k] : f.terms) out.terms.emplace(m, k * c);
  return out;
}

inline AlgebraElement negate(const AlgebraElement& f) { return scale(f, -1); }

namespace detail {

inline Rational binomial(long long n, long long k) {
  Int num = 1, den = 1;
  for (long long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return Rational(num, den);
}

}  // namespace detail

// Monomial product followed by the x1 x2 rewrite: with k = min of the summed
// x-exponents, (x1 x2)^k expands to sum_j C(k,j) y1^{s j} y2^{s (k-j)}; the
// y2 exponent is then discarded and recomputed from the canonical form.
inline AlgebraElement multiply_monomials(ShearParam s, const Monomial& a, const Rational& ca,
                                         const Monomial& b, const Rational& cb) {
  long long w1 = a.w1 + b.w1;
  long long w2 = a.w2 + b.w2;
  long long z1 = a.z1 + b.z1;
  std::vector<long long> t = a.t;
  if (b.t.size() > t.size()) t.resize(b.t.size(), 0);
  for (std::size_t i = 0; i < b.t.size(); ++i) t[i] += b.t[i];

  long long k = std::min(w1, w2);
  AlgebraElement out;
  Rational c = ca * cb;
  if (k == 0) {
    out.add_term(monomial(w1, w2, z1, std::move(t)), c);
    return out;
  }
  for (long long j = 0; j <= k; ++j)
    out.add_term(monomial(w1 - k, w2 - k, z1 + s.s * j, t), c * detail::binomial(k, j));
  return out;
}

inline AlgebraElement multiply(ShearParam s, const AlgebraElement& f, const AlgebraElement& g) {
  AlgebraElement out;
  for (const auto& [ma, ca] : f.terms)
    for (const auto& [mb, cb] : g.terms)
      out = add(out, multiply_monomials(s, ma, ca, mb, cb));
  return out;
}

// ---------------------------------------------------------------------------
// Valuation.

// The single piece attached to a basis monomial: a = z2, c = w1 - w2, and
// b = -z2 above / -z2 + s*c below.  t-exponents are grading bookkeeping and
// are ignored.
inline PointTriple valuation_of_monomial(ShearParam s, const Monomial& m) {
  long long z2 = m.z2(s);
  long long c = m.w1 - m.w2;
  Rational b = c >= 0 ? Rational(-z2) : Rational(-z2 + s.s * c);
  return {Rational(z2), b, Rational(c)};
}

// The basis monomial whose valuation is a given integer triple.
inline Monomial monomial_of_point(ShearParam s, const PointTriple& p) {
  if (!p.is_integral()) throw DomainViolation("monomial_of_point needs an integer triple");
  long long a = static_cast<long long>(numerator(p.a));
  long long c = static_cast<long long>(numerator(p.c));
  long long z1 = -a + s.s * std::min(c, 0LL);
  return monomial(std::max(c, 0LL), std::max(-c, 0LL), z1);
}

inline PLFunction valuation(ShearParam s, const AlgebraElement& f) {
  if (f.is_zero()) return PLFunction::infinity();
  PLFunction out;
  for (const auto& [m, c] : f.terms) out.pieces.push_back(piece_of(valuation_of_monomial(s, m)));
  return canonicalize(std::move(out));
}

// ---------------------------------------------------------------------------
// Supports, section spaces, graded pieces, units.

inline PLPolytope support(ShearParam s, const AlgebraElement& f) {
  if (f.is_zero()) throw ZeroElement("the zero element has no support");
  std::vector<Element> pts;
  for (const auto& [m, c] : f.terms) pts.push_back(element_of_monomial(s, m));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return point_convex_hull(s, pts);
}

// f lies in the section space of kP iff every exponent satisfies every
// constraint of P at threshold k * bound; the support is contained in kP iff
// its generating exponents are.
inline bool section_membership(const AlgebraElement& f, const PLPolytope& P, long long k) {
  if (!P.compact()) throw NotCompact("section_membership requires a compact polytope");
  for (const auto& [m, c] : f.terms) {
    ElementR e = to_rational(element_of_monomial(P.s, m));
    for (const PLHalfSpace& h : P.constraints)
      if (evaluate(P.s, h.p, e) < h.bound * k) return false;
  }
  return true;
}

// All basis monomials m with p_i(m) + r_i >= 0 for every constraint point of
// P, enumerated in monomial order.  Finite because P is compact.
inline std::vector<Monomial> graded_piece(const PLPolytope& P,
                                          const std::vector<long long>& rbar) {
  if (!P.compact()) throw NotCompact("graded_piece requires a compact polytope");
  if (rbar.size() != P.constraints.size())
    throw DomainViolation("graded_piece: one offset per constraint");

  std::vector<HalfPlane> shifted;
  for (std::size_t i = 0; i < P.constraints.size(); ++i)
    for (auto& c : halfspace_chart_constraints(P.s, {P.constraints[i].p, Rational(-rbar[i])},
                                               ChartId::chart1))
      shifted.push_back(c);
  Region reg = intersect(shifted);
  std::vector<Monomial> out;
  if (reg.kind == Region::Kind::empty) return out;
  if (reg.kind != Region::Kind::bounded)
    throw NotCompact("graded_piece region is unbounded");  // cannot happen for compact P

  Int xmin, xmax, ymin, ymax;
  bool first = true;
  for (const Vec2& v : reg.polygon.verts) {
    Int fx = floor_int(v.x), cx = ceil_int(v.x);
    Int fy = floor_int(v.y), cy = ceil_int(v.y);
    if (first) {
      xmin = fx; xmax = cx; ymin = fy; ymax = cy;
      first = false;
    } else {
      if (fx < xmin) xmin = fx;
      if (cx > xmax) xmax = cx;
      if (fy < ymin) ymin = fy;
      if (cy > ymax) ymax = cy;
    }
  }
  for (Int y = ymin; y <= ymax; ++y)
    for (Int x = xmin; x <= xmax; ++x) {
      Vec2 v = to_rational(Vec2I{x, y});
      bool ok = true;
      for (std::size_t i = 0; i < P.constraints.size(); ++i)
        if (evaluate_chart1(P.constraints[i].p, v) < -rbar[i]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      long long xi = static_cast<long long>(x), yi = static_cast<long long>(y);
      out.push_back(yi >= 0 ? monomial(yi, 0, -xi) : monomial(0, -yi, P.s.s * yi - xi));
    }
  std::sort(out.begin(), out.end());
  return out;
}

// The unit group of the algebra is generated by y1 y2^{-1}; a unit is a
// nonzero scalar times an integer power of it.
inline Monomial unit_generator(ShearParam /*s*/) { return monomial(0, 0, 1); }

inline bool is_unit(const AlgebraElement& f) {
  if (f.terms.size() != 1) return false;
  const Monomial& m = f.terms.begin()->first;
  return m.w1 == 0 && m.w2 == 0 && m.t.empty();
}

}  // namespace polyptych
