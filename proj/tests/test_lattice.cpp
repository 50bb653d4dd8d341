#include "polyptych/lattice.hpp"

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace polyptych;

TEST_CASE("shear parameter validation") {
  CHECK_THROWS_AS(ShearParam{0}, DomainViolation);
  CHECK_THROWS_AS(ShearParam{-3}, DomainViolation);
  CHECK(ShearParam{1}.s == 1);
}

TEST_CASE("mutation formula") {
  CHECK(mutate(ShearParam{1}, Vec2I{Int(0), Int(-1)}) == Vec2I{Int(-1), Int(-1)});
  CHECK(mutate(ShearParam{3}, Vec2I{Int(0), Int(0)}) == Vec2I{Int(0), Int(0)});
  CHECK(mutate(ShearParam{2}, Vec2I{Int(1), Int(-2)}) == Vec2I{Int(-5), Int(-2)});
}

TEST_CASE("mutation is an involution and piecewise linear") {
  test::Rng rng(7);
  for (int round = 0; round < 200; ++round) {
    ShearParam s{test::rand_int(rng, 1, 4)};
    Vec2I v{Int(test::rand_int(rng, -20, 20)), Int(test::rand_int(rng, -20, 20))};
    CHECK(mutate(s, mutate(s, v)) == v);

    FanCone cone = v.y >= 0 ? FanCone::upper : FanCone::lower;
    auto m = mutation_matrix(s, cone);
    Vec2I by_matrix{m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y};
    CHECK(by_matrix == mutate(s, v));
  }
}

TEST_CASE("the two matrices agree on the seam") {
  for (long long s = 1; s <= 4; ++s) {
    auto up = mutation_matrix(ShearParam{s}, FanCone::upper);
    auto lo = mutation_matrix(ShearParam{s}, FanCone::lower);
    for (long long x = -5; x <= 5; ++x) {
      CHECK(up[0][0] * x + up[0][1] * 0 == lo[0][0] * x + lo[0][1] * 0);
      CHECK(up[1][0] * x + up[1][1] * 0 == lo[1][0] * x + lo[1][1] * 0);
    }
  }
}

TEST_CASE("mutation matrices") {
  CHECK(mutation_matrix(ShearParam{1}, FanCone::lower) ==
        std::array<std::array<long long, 2>, 2>{{{-1, 1}, {0, 1}}});
  CHECK(mutation_matrix(ShearParam{7}, FanCone::upper) ==
        std::array<std::array<long long, 2>, 2>{{{-1, 0}, {0, 1}}});
}

TEST_CASE("fan membership") {
  CHECK(fan_cone_contains(FanCone::upper, Vec2I{Int(3), Int(0)}));
  CHECK(fan_cone_contains(FanCone::lower, Vec2I{Int(3), Int(0)}));
  CHECK(fan_cone_contains(FanCone::lower, Vec2I{Int(0), Int(-2)}));
  CHECK_FALSE(fan_cone_contains(FanCone::upper, Vec2I{Int(0), Int(-2)}));
}

TEST_CASE("addition in a chart") {
  ShearParam s{1};
  Element a{{Int(0), Int(1)}}, b{{Int(0), Int(-1)}};
  CHECK(add_in_chart(s, ChartId::chart1, a, b) == Element{{Int(0), Int(0)}});
  CHECK(add_in_chart(s, ChartId::chart2, a, b) == Element{{Int(1), Int(0)}});

  Element zero{{Int(0), Int(0)}};
  test::Rng rng(11);
  for (int round = 0; round < 100; ++round) {
    ShearParam sp{test::rand_int(rng, 1, 4)};
    Element x = test::rand_element(rng, 10), y = test::rand_element(rng, 10),
            z = test::rand_element(rng, 10);
    for (ChartId chart : kCharts) {
      CHECK(add_in_chart(sp, chart, x, zero) == x);
      CHECK(add_in_chart(sp, chart, x, y) == add_in_chart(sp, chart, y, x));
      CHECK(add_in_chart(sp, chart, add_in_chart(sp, chart, x, y), z) ==
            add_in_chart(sp, chart, x, add_in_chart(sp, chart, y, z)));
    }
  }
}

TEST_CASE("rational elements share the code paths") {
  ShearParam s{2};
  ElementR m{{Rational(1, 2), Rational(-3, 2)}};
  Vec2 c2 = m.chart(s, ChartId::chart2);
  CHECK(c2 == Vec2{Rational(-7, 2), Rational(-3, 2)});
  CHECK(element_from_chart(s, ChartId::chart2, c2) == m);
}
