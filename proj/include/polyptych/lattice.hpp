#pragma once

// The two-chart rank-2 mutation lattice family M_s: charts, the shear
// mutation, per-chart addition, and the associated two-cone fan.
//
// Elements are stored canonically by their chart-1 coordinates; chart-2
// coordinates are always derived through the mutation.  The same code paths
// serve integer elements and their rational extension.

#include "polyptych/rational.hpp"

#include <array>

namespace polyptych {

struct ShearParam {
  long long s;

  explicit ShearParam(long long value) : s(value) {
    if (value < 1) throw DomainViolation("shear parameter must be >= 1");
  }
};

enum class ChartId { chart1, chart2 };

constexpr std::array<ChartId, 2> kCharts{ChartId::chart1, ChartId::chart2};

// The shear (x, y) -> (min(0, s*y) - x, y).  Applying it twice is the
// identity, and the same formula maps chart 1 -> chart 2 and back.
template <class T>
Vec2T<T> mutate(ShearParam s, const Vec2T<T>& v) {
  T shear = v.y * s.s;
  if (shear > 0) shear = 0;
  return {shear - v.x, v.y};
}

// An element of M_s in canonical (chart-1) coordinates.
template <class T>
struct BasicElement {
  Vec2T<T> c1;

  Vec2T<T> chart(ShearParam s, ChartId id) const {
    return id == ChartId::chart1 ? c1 : mutate(s, c1);
  }

  friend bool operator==(const BasicElement&, const BasicElement&) = default;
  friend auto operator<=>(const BasicElement&, const BasicElement&) = default;
};

using Element = BasicElement<Int>;
using ElementR = BasicElement<Rational>;

template <class T>
BasicElement<T> element_from_chart(ShearParam s, ChartId id, const Vec2T<T>& v) {
  return {id == ChartId::chart1 ? v : mutate(s, v)};
}

inline ElementR to_rational(const Element& e) { return {to_rational(e.c1)}; }

// pi_alpha^{-1}(pi_alpha(a) + pi_alpha(b)); the result is stored canonically.
template <class T>
BasicElement<T> add_in_chart(ShearParam s, ChartId chart, const BasicElement<T>& a,
                             const BasicElement<T>& b) {
  return element_from_chart(s, chart, a.chart(s, chart) + b.chart(s, chart));
}

// Maximal cones of the fan: the upper and lower half-planes of chart 1.
enum class FanCone { upper, lower };

template <class T>
bool fan_cone_contains(FanCone cone, const Vec2T<T>& v) {
  return cone == FanCone::upper ? v.y >= 0 : v.y <= 0;
}

// The matrix of the mutation restricted to a fan cone, acting on chart-1
// column vectors: [[-1,0],[0,1]] on the upper cone, [[-1,s],[0,1]] below.
inline std::array<std::array<long long, 2>, 2> mutation_matrix(ShearParam s, FanCone cone) {
  if (cone == FanCone::upper) return {{{-1, 0}, {0, 1}}};
  return {{{-1, s.s}, {0, 1}}};
}

}  // namespace polyptych
