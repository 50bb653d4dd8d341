#pragma once

// Shared test utilities: a deterministic RNG, samplers for triples, elements
// and monomials, and the independent membership oracle for polygons.

#include "polyptych/algebra.hpp"
#include "polyptych/plconvex.hpp"
#include "polyptych/points.hpp"
#include "polyptych/polygon.hpp"

#include <random>
#include <vector>

namespace test {

using namespace polyptych;

using Rng = std::mt19937_64;

inline long long rand_int(Rng& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline Element rand_element(Rng& rng, long long box) {
  return {Vec2I{Int(rand_int(rng, -box, box)), Int(rand_int(rng, -box, box))}};
}

inline PointTriple rand_valid_triple(Rng& rng, ShearParam s, long long box) {
  long long c = rand_int(rng, -box, box);
  long long a = rand_int(rng, -box, box);
  long long b = std::min(0LL, s.s * c) - a;
  return point_from_triple(s, a, b, c);
}

inline PointTriple rand_invalid_triple(Rng& rng, ShearParam s, long long box) {
  for (;;) {
    long long a = rand_int(rng, -box, box);
    long long b = rand_int(rng, -box, box);
    long long c = rand_int(rng, -box, box);
    if (a + b != std::min(0LL, s.s * c)) return PointTriple{Rational(a), Rational(b), Rational(c)};
  }
}

inline Rational rand_rational(Rng& rng, long long box, long long max_den) {
  long long den = rand_int(rng, 1, max_den);
  long long num = rand_int(rng, -box * den, box * den);
  return Rational(num, den);
}

inline Monomial rand_monomial(Rng& rng, long long max_w, long long max_z) {
  long long w = rand_int(rng, 0, max_w);
  long long z = rand_int(rng, -max_z, max_z);
  if (rand_int(rng, 0, 1) == 0) return monomial(w, 0, z);
  return monomial(0, w, z);
}

inline AlgebraElement rand_algebra_element(Rng& rng, long long max_terms, long long max_w,
                                           long long max_z) {
  AlgebraElement f;
  long long terms = rand_int(rng, 1, max_terms);
  for (long long i = 0; i < terms; ++i)
    f.add_term(rand_monomial(rng, max_w, max_z), Rational(rand_int(rng, 1, 5)));
  if (f.is_zero()) f.add_term(monomial(0, 0, 0), 1);
  return f;
}

// Membership via fan triangulation from the first vertex; independent of the
// half-plane route.
inline bool polygon_contains_oracle(const ConvexPolygon& p, const Vec2& v) {
  if (p.verts.empty()) return false;
  if (p.verts.size() == 1) return v == p.verts[0];
  if (p.verts.size() == 2) {
    Vec2 d = p.verts[1] - p.verts[0];
    Vec2 w = v - p.verts[0];
    if (cross(d, w) != 0) return false;
    Rational t = dot(d, w);
    return t >= 0 && t <= dot(d, d);
  }
  for (std::size_t i = 1; i + 1 < p.verts.size(); ++i) {
    const Vec2& a = p.verts[0];
    const Vec2& b = p.verts[i];
    const Vec2& c = p.verts[i + 1];
    // barycentric signs within triangle (a, b, c), ccw
    Rational s1 = cross(b - a, v - a);
    Rational s2 = cross(c - b, v - b);
    Rational s3 = cross(a - c, v - c);
    if (s1 >= 0 && s2 >= 0 && s3 >= 0) return true;
  }
  return false;
}

inline std::array<std::array<long long, 2>, 2> rand_unimodular(Rng& rng) {
  // random product of elementary shears and the rotation
  std::array<std::array<long long, 2>, 2> u{{{1, 0}, {0, 1}}};
  auto mul = [&](std::array<std::array<long long, 2>, 2> m) {
    std::array<std::array<long long, 2>, 2> r{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r[i][j] = m[i][0] * u[0][j] + m[i][1] * u[1][j];
    u = r;
  };
  for (int k = 0; k < 6; ++k) {
    switch (rand_int(rng, 0, 2)) {
      case 0: mul({{{1, rand_int(rng, -2, 2)}, {0, 1}}}); break;
      case 1: mul({{{1, 0}, {rand_int(rng, -2, 2), 1}}}); break;
      default: mul({{{0, -1}, {1, 0}}}); break;
    }
  }
  return u;
}

}  // namespace test
