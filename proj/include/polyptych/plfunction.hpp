#pragma once

// The point semialgebra: piecewise-linear functions generated by points under
// pointwise min and +.  A function is a min of finitely many "kinked" linear
// pieces (a, b, c), each valued c*x + a*y above the chart-1 axis and
// c*x - b*y below.  The partial order is pointwise (f >= g iff min(f,g) = g),
// and comparisons are decided exactly by subdividing the two half-planes at
// every direction where two pieces of the right-hand side tie.

#include "polyptych/points.hpp"
#include "polyptych/rational.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace polyptych {

struct PLPiece {
  Rational a, b, c;

  friend bool operator==(const PLPiece&, const PLPiece&) = default;
  friend auto operator<=>(const PLPiece& p, const PLPiece& q) {
    if (auto k = p.a.compare(q.a); k != 0) return k < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto k = p.b.compare(q.b); k != 0) return k < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    auto k = p.c.compare(q.c);
    return k < 0    ? std::strong_ordering::less
           : k == 0 ? std::strong_ordering::equal
                    : std::strong_ordering::greater;
  }

  Rational eval(const Vec2& v) const {
    if (v.y >= 0) return Rational(c * v.x + a * v.y);
    return Rational(c * v.x - b * v.y);
  }
};

inline PLPiece piece_of(const PointTriple& p) { return {p.a, p.b, p.c}; }

struct PLFunction {
  bool infinite = false;        // the valuation of zero; top of the order
  std::vector<PLPiece> pieces;  // nonempty unless infinite

  static PLFunction infinity() { return {true, {}}; }
  static PLFunction single(const PLPiece& p) { return {false, {p}}; }

  Rational eval(const Vec2& v) const {
    if (infinite) throw DomainViolation("cannot evaluate the infinite function");
    Rational best = pieces.front().eval(v);
    for (std::size_t i = 1; i < pieces.size(); ++i) {
      Rational t = pieces[i].eval(v);
      if (t < best) best = t;
    }
    return best;
  }
};

inline Rational pl_eval(const PLFunction& f, const ElementR& m) {
  return f.eval(m.c1);
}

namespace detail {

// Linear form of a piece on one closed half-plane (upper: y >= 0).
inline Vec2 piece_form(const PLPiece& p, bool upper) {
  return upper ? Vec2{p.c, p.a} : Vec2{p.c, -p.b};
}

// Does the single piece f dominate min(g) on the whole plane?  Checked per
// half-plane on a fan of directions fine enough that one piece of g is active
// on each sector; a linear inequality on a sector (< pi) holds iff it holds
// at the two boundary rays.
inline bool piece_dominates(const PLPiece& f, const std::vector<PLPiece>& g, bool upper) {
  std::vector<Vec2I> dirs{{1, 0}, {-1, 0}};
  dirs.push_back(upper ? Vec2I{0, 1} : Vec2I{0, -1});
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      Vec2 d = piece_form(g[i], upper) - piece_form(g[j], upper);
      if (d.x == 0 && d.y == 0) continue;
      Vec2I di = primitive(d);
      for (Vec2I w : {Vec2I{-di.y, di.x}, Vec2I{di.y, -di.x}})
        if ((upper && w.y > 0) || (!upper && w.y < 0)) dirs.push_back(w);
    }
  Vec2 lf = piece_form(f, upper);
  for (const Vec2I& w : dirs) {
    Vec2 v = to_rational(w);
    Rational fv = dot(lf, v);
    Rational gv = dot(piece_form(g.front(), upper), v);
    for (std::size_t j = 1; j < g.size(); ++j) {
      Rational t = dot(piece_form(g[j], upper), v);
      if (t < gv) gv = t;
    }
    if (fv < gv) return false;
  }
  return true;
}

inline bool piece_dominates(const PLPiece& f, const std::vector<PLPiece>& g) {
  return piece_dominates(f, g, true) && piece_dominates(f, g, false);
}

}  // namespace detail

// f >= g pointwise.
inline bool pl_geq(const PLFunction& f, const PLFunction& g) {
  if (f.infinite) return true;
  if (g.infinite) return false;
  for (const PLPiece& p : f.pieces)
    if (!detail::piece_dominates(p, g.pieces)) return false;
  return true;
}

inline bool pl_eq(const PLFunction& f, const PLFunction& g) {
  return pl_geq(f, g) && pl_geq(g, f);
}

// Removes duplicate pieces and pieces dominated by the rest.  The function is
// unchanged; distinct canonical forms of equal functions are still possible,
// so equality stays semantic (pl_eq).
inline PLFunction canonicalize(PLFunction f) {
  if (f.infinite) return f;
  std::sort(f.pieces.begin(), f.pieces.end());
  f.pieces.erase(std::unique(f.pieces.begin(), f.pieces.end()), f.pieces.end());
  for (std::size_t i = 0; i < f.pieces.size() && f.pieces.size() > 1;) {
    std::vector<PLPiece> rest;
    for (std::size_t j = 0; j < f.pieces.size(); ++j)
      if (j != i) rest.push_back(f.pieces[j]);
    if (detail::piece_dominates(f.pieces[i], rest)) f.pieces = std::move(rest);
    else ++i;
  }
  return f;
}

// min (the semialgebra's addition).
inline PLFunction pl_min(const PLFunction& f, const PLFunction& g) {
  if (f.infinite) return g;
  if (g.infinite) return f;
  PLFunction out = f;
  out.pieces.insert(out.pieces.end(), g.pieces.begin(), g.pieces.end());
  return canonicalize(std::move(out));
}

// pointwise + (the semialgebra's multiplication); min-plus distributivity
// makes this the pairwise sum of pieces.
inline PLFunction pl_add(const PLFunction& f, const PLFunction& g) {
  if (f.infinite || g.infinite) return PLFunction::infinity();
  PLFunction out;
  for (const PLPiece& p : f.pieces)
    for (const PLPiece& q : g.pieces)
      out.pieces.push_back({p.a + q.a, p.b + q.b, p.c + q.c});
  return canonicalize(std::move(out));
}

// When the canonical form is one piece lying on the point locus, report it.
inline std::optional<PointTriple> as_point(ShearParam s, const PLFunction& f) {
  if (f.infinite) return std::nullopt;
  PLFunction c = canonicalize(f);
  if (c.pieces.size() != 1) return std::nullopt;
  const PLPiece& p = c.pieces.front();
  if (!on_point_locus(s, p.a, p.b, p.c)) return std::nullopt;
  return PointTriple{p.a, p.b, p.c};
}

}  // namespace polyptych
