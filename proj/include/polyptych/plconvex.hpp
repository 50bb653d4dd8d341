#pragma once

// PL half-spaces and PL polytopes in M_s: chart images, vertices, the
// chart-Gorenstein-Fano test, support functions, dual polytopes, and the
// point-convex hull.
//
// A point restricted to a chart is the min of its two linear extensions, so
// the chart image of { p >= a } is the intersection of two ordinary
// half-planes.  Chart images of intersections commute with the chart maps
// because those maps are bijections.

#include "polyptych/lattice.hpp"
#include "polyptych/points.hpp"
#include "polyptych/polygon.hpp"
#include "polyptych/rational.hpp"

#include <algorithm>
#include <vector>

namespace polyptych {

struct PLHalfSpace {
  PointTriple p;
  Rational bound;

  friend bool operator==(const PLHalfSpace&, const PLHalfSpace&) = default;
};

// The two linear pieces of a point on the requested chart, as half-plane
// constraints { n . v >= bound }.
inline std::vector<HalfPlane> halfspace_chart_constraints(ShearParam s, const PLHalfSpace& h,
                                                          ChartId chart) {
  Vec2 upper, lower;
  if (chart == ChartId::chart1) {
    upper = {h.p.c, h.p.a};
    lower = {h.p.c, -h.p.b};
  } else {
    upper = {-h.p.c, h.p.a};
    lower = {-h.p.c, h.p.c * s.s - h.p.b};
  }
  if (upper == lower) return {{upper, h.bound}};
  return {{upper, h.bound}, {lower, h.bound}};
}

inline Region halfspace_chart_image(ShearParam s, const PLHalfSpace& h, ChartId chart) {
  return intersect(halfspace_chart_constraints(s, h, chart));
}

struct PLPolytope {
  ShearParam s;
  std::vector<PLHalfSpace> constraints;
  Region image1;  // chart-1 image, computed at construction
  Region image2;  // chart-2 image

  bool compact() const {
    return image1.kind == Region::Kind::bounded && image2.kind == Region::Kind::bounded;
  }
  const ConvexPolygon& chart_polygon(ChartId c) const {
    const Region& r = c == ChartId::chart1 ? image1 : image2;
    if (r.kind != Region::Kind::bounded) throw NotCompact("chart image is not bounded");
    return r.polygon;
  }
};

inline PLPolytope pl_polytope(ShearParam s, std::vector<PLHalfSpace> constraints) {
  std::vector<HalfPlane> h1, h2;
  for (const PLHalfSpace& h : constraints) {
    for (auto& c : halfspace_chart_constraints(s, h, ChartId::chart1)) h1.push_back(c);
    for (auto& c : halfspace_chart_constraints(s, h, ChartId::chart2)) h2.push_back(c);
  }
  return {s, std::move(constraints), intersect(h1), intersect(h2)};
}

inline bool pl_contains(const PLPolytope& P, const ElementR& m) {
  for (const PLHalfSpace& h : P.constraints)
    if (evaluate(P.s, h.p, m) < h.bound) return false;
  return true;
}

// Vertices as elements (canonical chart-1 coordinates): the union over both
// charts of the preimages of the chart-image vertices.
inline std::vector<ElementR> pl_vertices(const PLPolytope& P) {
  if (!P.compact()) throw NotCompact("pl_vertices requires a compact polytope");
  std::vector<ElementR> out;
  for (const Vec2& v : P.image1.polygon.verts) out.push_back({v});
  for (const Vec2& v : P.image2.polygon.verts)
    out.push_back(element_from_chart(P.s, ChartId::chart2, v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool is_chart_gorenstein_fano(const PLPolytope& P) {
  if (!P.compact()) return false;
  for (const PLHalfSpace& h : P.constraints)
    if (h.bound != -1) return false;
  for (ChartId c : kCharts) {
    const ConvexPolygon& poly = P.chart_polygon(c);
    if (poly.dimension() != 2 || !is_integral(poly)) return false;
  }
  return true;
}

// Support function: min over u in P of w(u)(n).  The map u -> w(u)(n) is
// linear on each half of chart 1, so the min is over the vertices of the two
// clipped pieces.
inline Rational support_function(const PLPolytope& P, const ElementR& n) {
  if (!P.compact()) throw NotCompact("support_function requires a compact polytope");
  const ConvexPolygon& poly = P.chart_polygon(ChartId::chart1);
  HalfPlane upper{{Rational(0), Rational(1)}, Rational(0)};
  HalfPlane lower{{Rational(0), Rational(-1)}, Rational(0)};
  bool first = true;
  Rational best;
  for (const ConvexPolygon& piece : {clip(poly, upper), clip(poly, lower)}) {
    for (const Vec2& u : piece.verts) {
      Rational v = evaluate(P.s, dual_pairing_w(P.s, ElementR{u}), n);
      if (first || v < best) {
        best = v;
        first = false;
      }
    }
  }
  if (first) throw NotCompact("support_function of an empty polytope");
  return best;
}

inline bool origin_interior(const PLPolytope& P) {
  for (ChartId c : kCharts) {
    const Region& r = c == ChartId::chart1 ? P.image1 : P.image2;
    for (const HalfPlane& h : r.halves)
      if (h.bound >= 0) return false;  // origin not strictly inside
  }
  return true;
}

// Dual polytope: one half-space per vertex of P, with rational triples kept
// as-is (duals of integral polytopes need not be integral).
inline PLPolytope dual_polytope(const PLPolytope& P) {
  if (!P.compact()) throw NotCompact("dual_polytope requires a compact polytope");
  if (!origin_interior(P)) throw OriginNotInterior("dual is unbounded: origin not interior");
  std::vector<PLHalfSpace> duals;
  for (const ElementR& m : pl_vertices(P))
    duals.push_back({dual_pairing_w(P.s, m), Rational(-1)});
  return pl_polytope(P.s, std::move(duals));
}

// Dilation kP scales the thresholds.
inline PLPolytope dilate(const PLPolytope& P, const Rational& k) {
  if (k <= 0) throw DomainViolation("dilate expects a positive factor");
  std::vector<PLHalfSpace> scaled = P.constraints;
  for (PLHalfSpace& h : scaled) h.bound *= k;
  return pl_polytope(P.s, std::move(scaled));
}

// Drops constraints whose removal leaves both chart images unchanged.
// Deterministic: constraints are sorted canonically first, then greedily
// tested in order.
inline PLPolytope remove_redundant(const PLPolytope& P) {
  std::vector<PLHalfSpace> cs = P.constraints;
  std::sort(cs.begin(), cs.end(), [](const PLHalfSpace& x, const PLHalfSpace& y) {
    if (x.p != y.p) return x.p < y.p;
    return x.bound < y.bound;
  });
  auto images = [&](const std::vector<PLHalfSpace>& list) {
    PLPolytope Q = pl_polytope(P.s, list);
    return std::pair{Q.image1, Q.image2};
  };
  auto same_region = [](const Region& a, const Region& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Region::Kind::bounded) return a.polygon == b.polygon;
    if (a.kind == Region::Kind::unbounded)
      return a.recession == b.recession && intersect(a.halves).halves == intersect(b.halves).halves;
    return true;
  };
  auto [i1, i2] = images(cs);
  for (std::size_t i = 0; i < cs.size();) {
    std::vector<PLHalfSpace> reduced = cs;
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
    auto [r1, r2] = images(reduced);
    if (same_region(r1, i1) && same_region(r2, i2)) cs = std::move(reduced);
    else ++i;
  }
  return pl_polytope(P.s, std::move(cs));
}

// ---------------------------------------------------------------------------
// Point-convex hull.
//
// The hull of a finite integer set S is cut out by finitely many binding
// half-spaces.  Points with c >= 0 form the chart-1-linear piece
// (a, -a, c), those with c <= 0 the chart-2-linear piece (a, s*c - a, c); on
// each piece both the evaluation at a fixed element and the tight threshold
// min over S are linear in the piece parameters once the parameter half-plane
// is subdivided finely enough that a single member of S attains the min
// throughout each cell.  Constraints at the cell boundary rays then dominate
// all others, and subdividing finer than necessary only adds constraints that
// the redundancy pass removes.

inline PLPolytope point_convex_hull(ShearParam s, const std::vector<Element>& S) {
  if (S.empty()) throw EmptyInput("point_convex_hull of an empty set");

  std::vector<PLHalfSpace> constraints;
  auto add_piece = [&](ChartId chart) {
    std::vector<Vec2I> pts;
    for (const Element& m : S) pts.push_back({m.chart(s, chart).x, m.chart(s, chart).y});

    // Walls of the parameter subdivision: every direction orthogonal to a
    // difference of members of S (a superset of the min-normal-fan walls of
    // the hull of the chart image), plus the coordinate axes so every cell is
    // pointed.
    std::vector<Vec2I> dirs{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        Vec2I d = pts[i] - pts[j];
        if (d.x == 0 && d.y == 0) continue;
        dirs.push_back(primitive(Vec2I{-d.y, d.x}));
        dirs.push_back(primitive(Vec2I{d.y, -d.x}));
      }

    for (const Vec2I& l : dirs) {
      // Parameter ray l = (l_x, l_y) pairs with the functional
      // l_x * (chart x) + l_y * (chart y); the piece requires l_x >= 0.
      if (l.x < 0) continue;
      Int best;
      bool first = true;
      for (const Vec2I& v : pts) {
        Int val = l.x * v.x + l.y * v.y;
        if (first || val < best) {
          best = val;
          first = false;
        }
      }
      Rational a(l.y);
      PointTriple p = chart == ChartId::chart1
                          ? PointTriple{a, -a, Rational(l.x)}
                          : PointTriple{a, Rational(-l.x * s.s) - a, Rational(-l.x)};
      constraints.push_back({p, Rational(best)});
    }
  };
  add_piece(ChartId::chart1);
  add_piece(ChartId::chart2);

  // Dedupe identical triples, keeping the largest threshold (they coincide by
  // construction, but seam rays appear in both pieces).
  std::sort(constraints.begin(), constraints.end(), [](const PLHalfSpace& x, const PLHalfSpace& y) {
    if (x.p != y.p) return x.p < y.p;
    return x.bound > y.bound;
  });
  constraints.erase(std::unique(constraints.begin(), constraints.end(),
                                [](const PLHalfSpace& x, const PLHalfSpace& y) { return x.p == y.p; }),
                    constraints.end());

  return remove_redundant(pl_polytope(s, std::move(constraints)));
}

}  // namespace polyptych
