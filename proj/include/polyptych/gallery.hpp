#pragma once

// The built-in worked instances: the three-element set whose point-convex
// hull exceeds the classical hull in one chart, the six chart-Gorenstein-Fano
// style examples across s = 1..4, and the s = 1 divisor instance behind the
// Cox pipeline.  The figures command and the test suite both draw from here.

#include "polyptych/cox.hpp"
#include "polyptych/plconvex.hpp"
#include "polyptych/points.hpp"

#include <string>
#include <vector>

namespace polyptych {

struct GalleryInstance {
  std::string name;
  long long s;
  std::vector<std::array<long long, 3>> points;     // half-space triples, threshold -1
  std::vector<std::array<long long, 2>> elements;   // chart-1 element list (hull/set figures)
};

inline const std::vector<GalleryInstance>& gallery() {
  static const std::vector<GalleryInstance> g{
      {"pconv-set", 1, {}, {{0, 0}, {0, 1}, {0, -1}}},
      {"gf-s1-quad", 1, {{-2, 2, 1}, {0, -1, -1}, {1, -1, 1}}, {}},
      {"gf-s1-hex", 1, {{-1, 0, -1}, {1, -1, 0}, {-1, 1, 0}, {0, 0, 1}, {1, -1, 1}}, {}},
      {"gf-s2", 2, {{-1, -1, -1}, {1, -1, 1}, {0, 0, 1}, {-1, 1, 0}}, {}},
      {"gf-s3", 3, {{-2, -1, -1}, {1, -1, 1}, {0, 0, 1}}, {}},
      {"gf-s4", 4, {{-2, -2, -1}, {0, 0, 1}}, {}},
      {"nonintegral-dual", 1, {{0, 0, 1}, {2, -2, 1}, {-1, 0, -1}}, {}},
      {"cox-s1", 1, {{1, -1, 1}, {-2, 2, 1}, {1, -3, -2}}, {}},
  };
  return g;
}

inline const GalleryInstance& gallery_instance(const std::string& name) {
  for (const GalleryInstance& g : gallery())
    if (g.name == name) return g;
  throw Error("unknown gallery instance: " + name);
}

inline std::vector<PointTriple> gallery_points(const GalleryInstance& g) {
  ShearParam s{g.s};
  std::vector<PointTriple> pts;
  for (const auto& [a, b, c] : g.points)
    pts.push_back(point_from_triple(s, a, b, c));
  return pts;
}

inline PLPolytope gallery_polytope(const GalleryInstance& g) {
  ShearParam s{g.s};
  std::vector<PLHalfSpace> hs;
  for (const PointTriple& p : gallery_points(g)) hs.push_back({p, Rational(-1)});
  return pl_polytope(s, hs);
}

inline std::vector<Element> gallery_elements(const GalleryInstance& g) {
  std::vector<Element> out;
  for (const auto& [x, y] : g.elements) out.push_back({Vec2I{Int(x), Int(y)}});
  return out;
}

}  // namespace polyptych
