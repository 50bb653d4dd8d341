#pragma once

// Exact rational convex geometry in the plane: half-plane intersection with
// full classification (empty / bounded / unbounded with recession cone),
// canonical vertex representations, normal fans, dilation, integrality and
// lattice equivalence, plus homogeneous cones and their refinements.
//
// Polygon equality is equality of the canonical vertex list: counterclockwise
// order starting at the lexicographically least vertex, collinear points
// removed.  All arithmetic is exact.

#include "polyptych/rational.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace polyptych {

struct HalfPlane {
  Vec2 normal;     // must be nonzero
  Rational bound;  // region is { v : normal . v >= bound }

  bool contains(const Vec2& v) const { return dot(normal, v) >= bound; }

  friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
};

// ---------------------------------------------------------------------------
// Homogeneous cones.

struct Cone2 {
  enum class Kind { zero, ray, sector, half_plane, line, full };
  Kind kind = Kind::full;
  // Boundary rays, primitive integer.  For sector/half_plane the cone sweeps
  // counterclockwise from r1 to r2 (half_plane: r2 = -r1); for ray/line only
  // r1 is meaningful.
  Vec2I r1{}, r2{};

  friend bool operator==(const Cone2&, const Cone2&) = default;
};

inline Cone2 cone_full() { return {Cone2::Kind::full, {}, {}}; }
inline Cone2 cone_zero() { return {Cone2::Kind::zero, {}, {}}; }
inline Cone2 cone_ray(const Vec2I& r) { return {Cone2::Kind::ray, primitive(r), primitive(r)}; }
inline Cone2 cone_line(const Vec2I& r) {
  Vec2I p = primitive(r);
  if (p.y < 0 || (p.y == 0 && p.x < 0)) p = -p;  // canonical direction
  return {Cone2::Kind::line, p, -p};
}
inline Cone2 cone_sector(const Vec2I& a, const Vec2I& b) {
  Vec2I pa = primitive(a), pb = primitive(b);
  if (pa == pb) return cone_ray(pa);
  if (pa == -pb || cross(pa, pb) < 0)
    throw DomainViolation("cone_sector expects a counterclockwise pair spanning < pi");
  return {Cone2::Kind::sector, pa, pb};
}
// Counterclockwise side of r1: { v : cross(r1, v) >= 0 }.
inline Cone2 cone_half_plane(const Vec2I& r1) {
  Vec2I p = primitive(r1);
  return {Cone2::Kind::half_plane, p, -p};
}

inline bool cone_contains(const Cone2& c, const Vec2I& v) {
  switch (c.kind) {
    case Cone2::Kind::zero: return v.x == 0 && v.y == 0;
    case Cone2::Kind::ray:
      return (v.x == 0 && v.y == 0) || (cross(c.r1, v) == 0 && dot(c.r1, v) > 0);
    case Cone2::Kind::line: return cross(c.r1, v) == 0;
    case Cone2::Kind::half_plane: return cross(c.r1, v) >= 0;
    case Cone2::Kind::sector:
      return cross(c.r1, v) >= 0 && cross(v, c.r2) >= 0;
    case Cone2::Kind::full: return true;
  }
  return false;
}

inline std::vector<Vec2I> extreme_rays(const Cone2& c) {
  switch (c.kind) {
    case Cone2::Kind::zero: return {};
    case Cone2::Kind::full: return {};
    case Cone2::Kind::ray: return {c.r1};
    case Cone2::Kind::line: return {c.r1, -c.r1};
    case Cone2::Kind::half_plane: return {c.r1, c.r2};
    case Cone2::Kind::sector: return {c.r1, c.r2};
  }
  return {};
}

// Intersection of homogeneous half-planes { v : n . v >= 0 }.  Used for
// recession cones.
inline Cone2 cone_from_normals(const std::vector<Vec2I>& normals) {
  // Start from the full plane and clip one half-plane at a time, tracking the
  // current cone kind exactly.
  Cone2 c = cone_full();
  for (const Vec2I& n : normals) {
    if (n.x == 0 && n.y == 0) throw Error("cone_from_normals: zero normal");
    // Half-plane {n.v >= 0} is the ccw side of d = (n.y, -n.x).
    Vec2I d = primitive(Vec2I{n.y, -n.x});
    auto side = [&](const Vec2I& v) { return dot(n, v); };  // >= 0 means inside
    switch (c.kind) {
      case Cone2::Kind::zero: break;
      case Cone2::Kind::full: c = cone_half_plane(d); break;
      case Cone2::Kind::ray:
        if (side(c.r1) < 0) c = cone_zero();
        break;
      case Cone2::Kind::line: {
        Int s1 = side(c.r1);
        if (s1 > 0) c = cone_ray(c.r1);
        else if (s1 < 0) c = cone_ray(-c.r1);
        // s1 == 0: line lies on the boundary, unchanged
        break;
      }
      case Cone2::Kind::half_plane: {
        // r2 = -r1, so the two boundary rays sit on opposite sides of the
        // clipping line unless r1 lies on it.
        Int s1 = side(c.r1);
        if (s1 == 0) {
          Vec2I mid{-c.r1.y, c.r1.x};  // interior direction of c
          if (dot(n, mid) > 0) break;  // same half-plane
          c = cone_line(c.r1);
          break;
        }
        if (s1 > 0) c = cone_sector(c.r1, -d);
        else c = cone_sector(d, c.r2);
        break;
      }
      case Cone2::Kind::sector: {
        Int s1 = side(c.r1), s2 = side(c.r2);
        if (s1 >= 0 && s2 >= 0) break;  // sector < pi and both ends inside
        if (s1 < 0 && s2 < 0) {
          c = cone_zero();
          break;
        }
        // Boundary line of the half-plane crosses the sector interior.
        Vec2I hit = cone_contains(c, d) ? d : -d;
        if (s1 >= 0) {
          c = (c.r1 == hit) ? cone_ray(hit) : cone_sector(c.r1, hit);
        } else {
          c = (c.r2 == hit) ? cone_ray(hit) : cone_sector(hit, c.r2);
        }
        break;
      }
    }
  }
  return c;
}

// Subdivides cones.front() by the boundary rays of the remaining cones (and
// its own), producing pointed pieces that are pairwise internally disjoint
// and cover exactly cones.front().
inline std::vector<Cone2> refine_cones(const std::vector<Cone2>& cones) {
  if (cones.empty()) return {};
  const Cone2& base = cones.front();
  if (base.kind == Cone2::Kind::zero || base.kind == Cone2::Kind::ray ||
      base.kind == Cone2::Kind::line)
    return {base};

  std::vector<Vec2I> dirs;
  for (const Cone2& c : cones)
    for (const Vec2I& r : extreme_rays(c)) dirs.push_back(r);
  // A full/half-plane base needs generic splitting rays so every piece is a
  // pointed sector.
  dirs.push_back({1, 0});
  dirs.push_back({-1, 0});
  dirs.push_back({0, 1});
  dirs.push_back({0, -1});

  std::vector<Vec2I> inside;
  for (const Vec2I& d : dirs)
    if (cone_contains(base, d)) inside.push_back(d);
  std::sort(inside.begin(), inside.end(), angle_less);
  inside.erase(std::unique(inside.begin(), inside.end()), inside.end());

  std::vector<Cone2> out;
  auto emit = [&](const Vec2I& a, const Vec2I& b) {
    if (a == b) return;
    Cone2 piece = cone_sector(a, b);
    // Keep only pieces inside the base (relevant when base is a sector).
    if (cone_contains(base, a) && cone_contains(base, b)) out.push_back(piece);
  };
  if (base.kind == Cone2::Kind::full) {
    for (std::size_t i = 0; i < inside.size(); ++i)
      emit(inside[i], inside[(i + 1) % inside.size()]);
  } else {
    // half_plane or sector: walk ccw from base.r1 to base.r2.
    std::vector<Vec2I> walk;
    walk.push_back(base.r1);
    for (const Vec2I& d : inside)
      if (d != base.r1 && d != base.r2) walk.push_back(d);
    walk.push_back(base.r2);
    std::sort(walk.begin() + 1, walk.end() - 1, [&](const Vec2I& a, const Vec2I& b) {
      // ccw order measured from base.r1
      Int ca = cross(base.r1, a), cb = cross(base.r1, b);
      bool ha = ca > 0 || (ca == 0 && dot(base.r1, a) > 0);
      bool hb = cb > 0 || (cb == 0 && dot(base.r1, b) > 0);
      if (ha != hb) return ha;
      return cross(a, b) > 0;
    });
    walk.erase(std::unique(walk.begin(), walk.end()), walk.end());
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) emit(walk[i], walk[i + 1]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polygons.

struct ConvexPolygon {
  // Canonical ccw vertex list starting at the lexicographic minimum.
  std::vector<Vec2> verts;

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

  int dimension() const {
    if (verts.empty()) return -1;
    if (verts.size() == 1) return 0;
    if (verts.size() == 2) return 1;
    return 2;
  }
};

namespace detail {

// Convex hull (Andrew's monotone chain), exact; removes collinear points.
inline std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Vec2> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace detail

// Canonical polygon from an arbitrary point set (its convex hull).
inline ConvexPolygon polygon_from_points(const std::vector<Vec2>& pts) {
  ConvexPolygon p;
  p.verts = detail::convex_hull(pts);
  // monotone chain already starts at the lexicographic minimum and runs ccw
  return p;
}

inline const std::vector<Vec2>& vertices(const ConvexPolygon& p) { return p.verts; }

inline bool is_integral(const ConvexPolygon& p) {
  for (const Vec2& v : p.verts)
    if (!is_integer(v.x) || !is_integer(v.y)) return false;
  return true;
}

inline bool polygon_contains(const ConvexPolygon& p, const Vec2& v) {
  if (p.verts.empty()) return false;
  if (p.verts.size() == 1) return v == p.verts[0];
  if (p.verts.size() == 2) {
    Vec2 d = p.verts[1] - p.verts[0];
    if (cross(d, v - p.verts[0]) != 0) return false;
    Rational t = dot(d, v - p.verts[0]);
    return t >= 0 && t <= dot(d, d);
  }
  for (std::size_t i = 0; i < p.verts.size(); ++i) {
    const Vec2& a = p.verts[i];
    const Vec2& b = p.verts[(i + 1) % p.verts.size()];
    if (cross(b - a, v - a) < 0) return false;
  }
  return true;
}

// Inward edge constraints of a bounded polygon (dimension 2: per edge;
// segments and points get box-style constraints).
inline std::vector<HalfPlane> hrep(const ConvexPolygon& p) {
  std::vector<HalfPlane> hs;
  if (p.verts.empty()) return {{Vec2{Rational(0), Rational(1)}, Rational(1)},
                               {Vec2{Rational(0), Rational(-1)}, Rational(1)}};
  if (p.verts.size() == 1) {
    const Vec2& v = p.verts[0];
    hs.push_back({{Rational(1), Rational(0)}, v.x});
    hs.push_back({{Rational(-1), Rational(0)}, -v.x});
    hs.push_back({{Rational(0), Rational(1)}, v.y});
    hs.push_back({{Rational(0), Rational(-1)}, -v.y});
    return hs;
  }
  if (p.verts.size() == 2) {
    Vec2 d = p.verts[1] - p.verts[0];
    Vec2 n{-d.y, d.x};
    hs.push_back({n, dot(n, p.verts[0])});
    hs.push_back({-n, dot(-n, p.verts[0])});
    hs.push_back({d, dot(d, p.verts[0])});
    hs.push_back({-d, dot(-d, p.verts[1])});
    return hs;
  }
  for (std::size_t i = 0; i < p.verts.size(); ++i) {
    const Vec2& a = p.verts[i];
    const Vec2& b = p.verts[(i + 1) % p.verts.size()];
    Vec2 e = b - a;
    Vec2 n{-e.y, e.x};  // inward for ccw order
    hs.push_back({n, dot(n, a)});
  }
  return hs;
}

struct Region {
  enum class Kind { empty, bounded, unbounded };
  Kind kind = Kind::empty;
  ConvexPolygon polygon;             // bounded only
  std::vector<HalfPlane> halves;     // defining constraints (nonzero normals)
  Cone2 recession = cone_zero();     // unbounded only

  bool contains(const Vec2& v) const {
    if (kind == Kind::empty) return false;
    for (const HalfPlane& h : halves)
      if (!h.contains(v)) return false;
    return true;
  }
};

// Exact intersection of closed half-planes with classification.  Accepts
// trivial constraints (zero normal): {0 >= t} is the whole plane for t <= 0
// and empty otherwise.
inline Region intersect(const std::vector<HalfPlane>& raw) {
  Region r;
  std::vector<HalfPlane> hs;
  for (const HalfPlane& h : raw) {
    if (h.normal.x == 0 && h.normal.y == 0) {
      if (h.bound > 0) {
        r.kind = Region::Kind::empty;
        return r;
      }
      continue;  // whole plane
    }
    hs.push_back(h);
  }
  // Dedupe parallel constraints, keeping the tightest bound per direction.
  std::vector<HalfPlane> uniq;
  for (const HalfPlane& h : hs) {
    Vec2I d = primitive(h.normal);
    // normalize so the normal itself is the primitive integer vector
    Rational scale = h.normal.x != 0 ? Rational(d.x) / h.normal.x : Rational(d.y) / h.normal.y;
    HalfPlane n{to_rational(d), h.bound * scale};
    bool merged = false;
    for (HalfPlane& u : uniq)
      if (u.normal == n.normal) {
        if (n.bound > u.bound) u.bound = n.bound;
        merged = true;
        break;
      }
    if (!merged) uniq.push_back(n);
  }
  hs = std::move(uniq);
  r.halves = hs;

  if (hs.empty()) {
    r.kind = Region::Kind::unbounded;
    r.recession = cone_full();
    return r;
  }

  // Recession cone decides boundedness.
  std::vector<Vec2I> normals;
  for (const HalfPlane& h : hs) normals.push_back(primitive(h.normal));
  Cone2 rec = cone_from_normals(normals);

  // Candidate vertices: pairwise boundary intersections satisfying all
  // constraints.
  std::vector<Vec2> cand;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      Rational det = cross(hs[i].normal, hs[j].normal);
      if (det == 0) continue;
      Vec2 v{(hs[i].bound * hs[j].normal.y - hs[j].bound * hs[i].normal.y) / det,
             (hs[j].bound * hs[i].normal.x - hs[i].bound * hs[j].normal.x) / det};
      bool ok = true;
      for (const HalfPlane& h : hs)
        if (!h.contains(v)) {
          ok = false;
          break;
        }
      if (ok) cand.push_back(v);
    }
  }

  if (rec.kind == Cone2::Kind::zero) {
    // Bounded and nonempty implies a vertex, so candidates decide.
    if (cand.empty()) {
      r.kind = Region::Kind::empty;
      return r;
    }
    r.kind = Region::Kind::bounded;
    r.polygon = polygon_from_points(cand);
    return r;
  }

  // A nonempty region without a vertex has a lineality direction, which
  // forces every normal onto one line; after deduplication that means a
  // single constraint or an antiparallel pair (a slab).
  bool feasible;
  bool all_parallel = true;
  for (std::size_t i = 1; i < hs.size(); ++i)
    if (cross(hs[0].normal, hs[i].normal) != 0) {
      all_parallel = false;
      break;
    }
  if (!all_parallel) {
    feasible = !cand.empty();
  } else if (hs.size() == 1) {
    feasible = true;
  } else {
    // exactly two constraints with primitive normals n and -n
    feasible = hs[0].bound <= -hs[1].bound;
  }
  r.kind = feasible ? Region::Kind::unbounded : Region::Kind::empty;
  r.recession = rec;
  return r;
}

// Clips a bounded polygon by one half-plane (exact Sutherland-Hodgman step).
inline ConvexPolygon clip(const ConvexPolygon& p, const HalfPlane& h) {
  if (p.verts.empty()) return p;
  if (p.verts.size() <= 2) {
    std::vector<Vec2> keep;
    if (p.verts.size() == 2) {
      const Vec2 &a = p.verts[0], &b = p.verts[1];
      Rational fa = dot(h.normal, a) - h.bound, fb = dot(h.normal, b) - h.bound;
      if (fa >= 0) keep.push_back(a);
      if ((fa < 0) != (fb < 0)) {
        Rational t = fa / (fa - fb);
        keep.push_back({a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t});
      }
      if (fb >= 0) keep.push_back(b);
    } else if (h.contains(p.verts[0])) {
      keep.push_back(p.verts[0]);
    }
    return polygon_from_points(keep);
  }
  std::vector<Vec2> out;
  const auto& vs = p.verts;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Vec2& a = vs[i];
    const Vec2& b = vs[(i + 1) % vs.size()];
    Rational fa = dot(h.normal, a) - h.bound;
    Rational fb = dot(h.normal, b) - h.bound;
    if (fa >= 0) out.push_back(a);
    if ((fa < 0) != (fb < 0)) {
      Rational t = fa / (fa - fb);
      out.push_back({a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t});
    }
  }
  return polygon_from_points(out);
}

inline ConvexPolygon dilate(const ConvexPolygon& p, const Rational& k) {
  if (k <= 0) throw DomainViolation("dilate expects a positive factor");
  ConvexPolygon out;
  out.verts.reserve(p.verts.size());
  // scaling by a positive factor preserves the canonical order
  for (const Vec2& v : p.verts) out.verts.push_back({v.x * k, v.y * k});
  return out;
}

// Min-normal fan of a full-dimensional bounded polygon: the cone attached to
// vertex v is { l : l.v = min over the polygon of l }.
inline std::vector<std::pair<Cone2, Vec2>> normal_fan(const ConvexPolygon& p) {
  if (p.dimension() != 2) throw DegenerateInput("normal_fan expects a full-dimensional polygon");
  std::vector<std::pair<Cone2, Vec2>> fan;
  std::size_t n = p.verts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& prev = p.verts[(i + n - 1) % n];
    const Vec2& cur = p.verts[i];
    const Vec2& next = p.verts[(i + 1) % n];
    // l is minimized at cur iff l.(next - cur) >= 0 and l.(prev - cur) >= 0;
    // the cone runs ccw from the inward normal of the incoming edge to the
    // inward normal of the outgoing edge.
    Vec2 e1 = next - cur;
    Vec2 e0 = cur - prev;
    Vec2I outgoing = primitive(Vec2{-e1.y, e1.x});
    Vec2I incoming = primitive(Vec2{-e0.y, e0.x});
    fan.emplace_back(incoming == outgoing ? cone_ray(incoming)
                                          : cone_sector(incoming, outgoing),
                     cur);
  }
  return fan;
}

// Lattice equivalence of bounded integral polygons: exists U in GL(2,Z) with
// det +-1 and integer translation t with U*p + t = q.  Decided by mapping one
// vertex triple of p onto every oriented vertex triple of q.
struct UnimodularMap {
  std::array<std::array<Int, 2>, 2> u;
  Vec2I t;
};

inline std::optional<UnimodularMap> lattice_equivalence(const ConvexPolygon& p,
                                                        const ConvexPolygon& q) {
  if (!is_integral(p) || !is_integral(q)) throw NotIntegral("lattice equivalence requires integral polygons");
  auto ivert = [](const ConvexPolygon& poly) {
    std::vector<Vec2I> out;
    for (const Vec2& v : poly.verts) out.push_back({numerator(v.x), numerator(v.y)});
    return out;
  };
  std::vector<Vec2I> pv = ivert(p), qv = ivert(q);
  if (pv.size() != qv.size()) return std::nullopt;
  if (pv.empty()) return UnimodularMap{{{{1, 0}, {0, 1}}}, {0, 0}};
  if (pv.size() == 1) return UnimodularMap{{{{1, 0}, {0, 1}}}, qv[0] - pv[0]};
  if (pv.size() == 2) {
    // Segments: equivalent iff the lattice lengths agree.
    Vec2I dp = pv[1] - pv[0], dq = qv[1] - qv[0];
    Int lp = gcd_int(dp.x, dp.y), lq = gcd_int(dq.x, dq.y);
    if (lp != lq) return std::nullopt;
    // A unimodular map sending primitive(dp) to primitive(dq) always exists;
    // complete each primitive vector to a basis.
    auto complete = [](const Vec2I& v) {
      // find w with det(v, w) = 1 via extended gcd
      Int a = v.x, b = v.y;
      Int old_r = a, r = b, old_s = 1, ss = 0, old_t = 0, tt = 1;
      while (r != 0) {
        Int qd = old_r / r;
        Int tmp = old_r - qd * r; old_r = r; r = tmp;
        tmp = old_s - qd * ss; old_s = ss; ss = tmp;
        tmp = old_t - qd * tt; old_t = tt; tt = tmp;
      }
      // old_s * x + old_t * y = gcd = +-1 after normalization below
      return Vec2I{-old_t, old_s};  // det(v, w) = v.x*old_s + v.y*old_t = gcd
    };
    Vec2I vp = primitive(dp), vq = primitive(dq);
    Vec2I wp = complete(vp), wq = complete(vq);
    // U maps basis (vp, wp) to (vq, wq): U = [vq wq] * [vp wp]^{-1}
    Int det_p = cross(vp, wp);  // +-1
    std::array<std::array<Int, 2>, 2> u{};
    // [vp wp]^{-1} = 1/det * [[wp.y, -wp.x], [-vp.y, vp.x]]
    u[0][0] = (vq.x * wp.y - wq.x * vp.y) / det_p;
    u[0][1] = (-vq.x * wp.x + wq.x * vp.x) / det_p;
    u[1][0] = (vq.y * wp.y - wq.y * vp.y) / det_p;
    u[1][1] = (-vq.y * wp.x + wq.y * vp.x) / det_p;
    Vec2I t = qv[0] - Vec2I{u[0][0] * pv[0].x + u[0][1] * pv[0].y,
                            u[1][0] * pv[0].x + u[1][1] * pv[0].y};
    return UnimodularMap{u, t};
  }

  std::size_t n = pv.size();
  Vec2I e1 = pv[1] - pv[0];
  Vec2I e2 = pv[2] - pv[1];
  Int d = cross(e1, e2);  // nonzero: consecutive polygon edges
  for (int orient = 0; orient < 2; ++orient) {
    std::vector<Vec2I> w = qv;
    if (orient == 1) std::reverse(w.begin(), w.end());
    for (std::size_t off = 0; off < n; ++off) {
      Vec2I f1 = w[(off + 1) % n] - w[off];
      Vec2I f2 = w[(off + 2) % n] - w[(off + 1) % n];
      // Solve U e1 = f1, U e2 = f2 over the rationals; accept integer U with
      // det +-1.
      // U = [f1 f2] * [e1 e2]^{-1}
      Int a = f1.x * e2.y - f2.x * e1.y;
      Int b = -f1.x * e2.x + f2.x * e1.x;
      Int c = f1.y * e2.y - f2.y * e1.y;
      Int dd = -f1.y * e2.x + f2.y * e1.x;
      if (a % d != 0 || b % d != 0 || c % d != 0 || dd % d != 0) continue;
      std::array<std::array<Int, 2>, 2> u{{{a / d, b / d}, {c / d, dd / d}}};
      Int det = u[0][0] * u[1][1] - u[0][1] * u[1][0];
      if (det != 1 && det != -1) continue;
      Vec2I t = w[off] - Vec2I{u[0][0] * pv[0].x + u[0][1] * pv[0].y,
                               u[1][0] * pv[0].x + u[1][1] * pv[0].y};
      // Verify the full vertex sets match.
      std::vector<Vec2> mapped;
      for (const Vec2I& v : pv)
        mapped.push_back(to_rational(Vec2I{u[0][0] * v.x + u[0][1] * v.y + t.x,
                                           u[1][0] * v.x + u[1][1] * v.y + t.y}));
      if (polygon_from_points(mapped) == q) return UnimodularMap{u, t};
    }
  }
  return std::nullopt;
}

inline bool lattice_equivalent(const ConvexPolygon& p, const ConvexPolygon& q) {
  return lattice_equivalence(p, q).has_value();
}

}  // namespace polyptych
