#pragma once

// Deterministic SVG rendering of chart pictures: a lattice-dot grid over the
// content bounding box padded by one, light axes, the region filled at 50%
// gray, and optional emphasized lattice points.  Coordinates are formatted by
// exact integer rounding, so output is byte-identical across runs.

#include "polyptych/polygon.hpp"
#include "polyptych/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyptych {

struct ChartDrawing {
  std::optional<ConvexPolygon> shape;  // already bounded (clip first if needed)
  std::vector<HalfPlane> true_boundary;  // stroke only edges on these lines; empty = all
  std::vector<Vec2> marks;
};

namespace detail {

// Fixed-point decimal with four places, exact rounding half away from zero.
inline std::string svg_num(const Rational& q) {
  Int scaled = numerator(q * 20000 + (q >= 0 ? Rational(1) : Rational(-1))) /
               (denominator(q * 20000 + (q >= 0 ? Rational(1) : Rational(-1))) * 2);
  bool neg = scaled < 0;
  Int a = neg ? -scaled : scaled;
  Int whole = a / 10000, frac = a % 10000;
  std::string f = frac.str();
  f.insert(f.begin(), 4 - f.size(), '0');
  while (!f.empty() && f.back() == '0') f.pop_back();
  std::string out = (neg ? "-" : "") + whole.str();
  if (!f.empty()) out += "." + f;
  return out;
}

}  // namespace detail

inline std::string render_chart_svg(const ChartDrawing& d) {
  // Content bounding box in lattice coordinates, at least [-2,2]^2, padded.
  Int xmin = -2, xmax = 2, ymin = -2, ymax = 2;
  auto grow = [&](const Vec2& v) {
    Int fx = floor_int(v.x), cx = ceil_int(v.x);
    Int fy = floor_int(v.y), cy = ceil_int(v.y);
    if (fx < xmin) xmin = fx;
    if (cx > xmax) xmax = cx;
    if (fy < ymin) ymin = fy;
    if (cy > ymax) ymax = cy;
  };
  if (d.shape)
    for (const Vec2& v : d.shape->verts) grow(v);
  for (const Vec2& v : d.marks) grow(v);
  xmin -= 1; ymin -= 1; xmax += 1; ymax += 1;

  const int unit = 40;
  auto X = [&](const Rational& x) { return detail::svg_num((x - Rational(xmin)) * unit); };
  auto Y = [&](const Rational& y) { return detail::svg_num((Rational(ymax) - y) * unit); };
  Int w = (xmax - xmin) * unit, h = (ymax - ymin) * unit;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + w.str() + " " + h.str() +
         "\" width=\"" + w.str() + "\" height=\"" + h.str() + "\">\n";

  if (d.shape && d.shape->verts.size() >= 3) {
    std::string pts;
    for (const Vec2& v : d.shape->verts) {
      if (!pts.empty()) pts += " ";
      pts += X(v.x) + "," + Y(v.y);
    }
    out += "  <polygon points=\"" + pts + "\" fill=\"#c0c0c0\" stroke=\"none\"/>\n";
    const auto& vs = d.shape->verts;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const Vec2& a = vs[i];
      const Vec2& b = vs[(i + 1) % vs.size()];
      bool stroke = d.true_boundary.empty();
      for (const HalfPlane& hp : d.true_boundary)
        if (dot(hp.normal, a) == hp.bound && dot(hp.normal, b) == hp.bound) {
          stroke = true;
          break;
        }
      if (stroke)
        out += "  <line x1=\"" + X(a.x) + "\" y1=\"" + Y(a.y) + "\" x2=\"" + X(b.x) +
               "\" y2=\"" + Y(b.y) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
  } else if (d.shape && d.shape->verts.size() == 2) {
    const Vec2& a = d.shape->verts[0];
    const Vec2& b = d.shape->verts[1];
    out += "  <line x1=\"" + X(a.x) + "\" y1=\"" + Y(a.y) + "\" x2=\"" + X(b.x) + "\" y2=\"" +
           Y(b.y) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }

  // axes
  out += "  <line x1=\"" + X(Rational(xmin)) + "\" y1=\"" + Y(Rational(0)) + "\" x2=\"" +
         X(Rational(xmax)) + "\" y2=\"" + Y(Rational(0)) +
         "\" stroke=\"#999999\" stroke-width=\"0.8\"/>\n";
  out += "  <line x1=\"" + X(Rational(0)) + "\" y1=\"" + Y(Rational(ymin)) + "\" x2=\"" +
         X(Rational(0)) + "\" y2=\"" + Y(Rational(ymax)) +
         "\" stroke=\"#999999\" stroke-width=\"0.8\"/>\n";

  for (Int gy = ymin; gy <= ymax; ++gy)
    for (Int gx = xmin; gx <= xmax; ++gx)
      out += "  <circle cx=\"" + X(Rational(gx)) + "\" cy=\"" + Y(Rational(gy)) +
             "\" r=\"1.6\" fill=\"black\"/>\n";

  for (const Vec2& v : d.marks)
    out += "  <circle cx=\"" + X(v.x) + "\" cy=\"" + Y(v.y) + "\" r=\"4.5\" fill=\"black\"/>\n";

  out += "</svg>\n";
  return out;
}

// Clips an unbounded region to the padded box spanned by the given lattice
// window for drawing.
inline ConvexPolygon clip_region_to_box(const Region& r, Int xmin, Int xmax, Int ymin, Int ymax) {
  std::vector<HalfPlane> hs = r.halves;
  hs.push_back({{Rational(1), Rational(0)}, Rational(xmin)});
  hs.push_back({{Rational(-1), Rational(0)}, Rational(-xmax)});
  hs.push_back({{Rational(0), Rational(1)}, Rational(ymin)});
  hs.push_back({{Rational(0), Rational(-1)}, Rational(-ymax)});
  Region clipped = intersect(hs);
  if (clipped.kind != Region::Kind::bounded) return {};
  return clipped.polygon;
}

}  // namespace polyptych
