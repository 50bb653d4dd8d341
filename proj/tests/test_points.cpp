#include "polyptych/points.hpp"

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace polyptych;

namespace {
Element elem(long long x, long long y) { return {Vec2I{Int(x), Int(y)}}; }
}  // namespace

TEST_CASE("triple validation") {
  ShearParam s{1};
  CHECK_NOTHROW(point_from_triple(s, -2, 2, 1));
  CHECK_NOTHROW(point_from_triple(s, 1, -3, -2));
  CHECK_THROWS_AS(point_from_triple(s, 1, -3, 2), InvalidTriple);
}

TEST_CASE("evaluation in chart 1") {
  ShearParam s{1};
  PointTriple p = point_from_triple(s, -2, 2, 1);
  CHECK(evaluate(s, p, elem(1, 1)) == -1);  // p(x, y) = x - 2y
  CHECK(evaluate(s, p, elem(0, 0)) == 0);
  PointTriple r = point_from_triple(s, 1, -3, -2);
  CHECK(evaluate(s, r, elem(-1, 0)) == 2);
}

TEST_CASE("evaluation in chart 2") {
  ShearParam s{1};
  PointTriple q = point_from_triple(s, 0, -1, -1);
  test::Rng rng(3);
  for (int round = 0; round < 50; ++round) {
    Vec2 v{Rational(test::rand_int(rng, -10, 10)), Rational(test::rand_int(rng, -10, 10))};
    CHECK(evaluate_chart2(s, q, v) == v.x);  // q(x', y') = x'
  }
  CHECK(evaluate_chart2(s, q, Vec2{Rational(0), Rational(0)}) == 0);

  PointTriple p = point_from_triple(s, -2, 2, 1);
  CHECK(evaluate_chart2(s, p, Vec2{Rational(0), Rational(-1)}) == 1);

  // chart-2 evaluation agrees with chart-1 evaluation after mutating
  for (int round = 0; round < 100; ++round) {
    ShearParam sp{test::rand_int(rng, 1, 3)};
    PointTriple pt = test::rand_valid_triple(rng, sp, 6);
    Element m = test::rand_element(rng, 8);
    Vec2 c2 = to_rational(m.chart(sp, ChartId::chart2));
    CHECK(evaluate_chart2(sp, pt, c2) == evaluate(sp, pt, m));
  }
}

TEST_CASE("the defining axiom") {
  ShearParam s{1};
  PointTriple bad{Rational(1), Rational(1), Rational(1)};
  CHECK_FALSE(point_axiom_check(s, bad, elem(0, 1), elem(0, -1)));
  CHECK(point_axiom_check(s, bad, elem(0, 0), elem(0, 0)));

  test::Rng rng(5);
  for (int round = 0; round < 200; ++round) {
    ShearParam sp{test::rand_int(rng, 1, 4)};
    PointTriple p = test::rand_valid_triple(rng, sp, 8);
    CHECK(point_axiom_check(sp, p, test::rand_element(rng, 10), test::rand_element(rng, 10)));
  }
}

TEST_CASE("linear charts and fullness") {
  ShearParam s{1};
  CHECK(linear_charts(s, point_from_triple(s, -2, 2, 1)) ==
        std::vector<ChartId>{ChartId::chart1});
  CHECK(linear_charts(s, point_from_triple(s, 0, -1, -1)) ==
        std::vector<ChartId>{ChartId::chart2});
  CHECK(linear_charts(s, point_from_triple(s, 1, -1, 0)) ==
        std::vector<ChartId>{ChartId::chart1, ChartId::chart2});

  test::Rng rng(9);
  for (int round = 0; round < 200; ++round) {
    ShearParam sp{test::rand_int(rng, 1, 4)};
    CHECK_FALSE(linear_charts(sp, test::rand_valid_triple(rng, sp, 10)).empty());
  }
}

TEST_CASE("self-dual pairing") {
  ShearParam s{1};
  CHECK(dual_pairing_w(s, elem(1, 1)) == point_from_triple(s, 1, -1, 1));
  CHECK(dual_pairing_w(s, elem(0, -1)) == point_from_triple(s, 0, -1, -1));
  CHECK(dual_pairing_w(s, elem(0, 0)) == point_from_triple(s, 0, 0, 0));

  test::Rng rng(13);
  for (int round = 0; round < 300; ++round) {
    ShearParam sp{test::rand_int(rng, 1, 4)};
    Element m = test::rand_element(rng, 10), m2 = test::rand_element(rng, 10);
    PointTriple w = dual_pairing_w(sp, m);
    CHECK(on_point_locus(sp, w.a, w.b, w.c));
    CHECK(check_symmetry(sp, m, m2));
    CHECK(check_symmetry(sp, m, m));
    // preimages of {c >= 0} / {c <= 0} are the fan cones
    CHECK(sign(w.c) == sign(Rational(m.c1.y)));
  }

  // both evaluation routes give the same number on a mixed-cone pair
  Element m{{Int(1), Int(1)}}, m2{{Int(2), Int(-3)}};
  CHECK(evaluate(s, dual_pairing_w(s, m), m2) == -1);
  CHECK(evaluate(s, dual_pairing_w(s, m2), m) == -1);
  CHECK(evaluate(s, dual_pairing_w(s, elem(1, 0)), elem(0, 1)) == 1);
  CHECK(evaluate(s, dual_pairing_w(s, elem(0, 1)), elem(1, 0)) == 1);
}

TEST_CASE("coordinate embeddings") {
  ShearParam s{1};
  CHECK(theta1(Vec2I{Int(3), Int(-2)}) == Vec4{Int(-2), Int(0), Int(0), Int(3)});
  CHECK(theta1(Vec2I{Int(0), Int(0)}) == Vec4{Int(0), Int(0), Int(0), Int(0)});
  CHECK(theta2(Vec2I{Int(5), Int(1)}) == Vec4{Int(1), Int(0), Int(5), Int(0)});

  CHECK(psi1_inv(ShearParam{2}, Vec4{Int(2), Int(0), Int(0), Int(3)}) ==
        MVec4{Int(2), Int(0), Int(-3), Int(3)});
  CHECK(psi1_inv(s, Vec4{Int(-1), Int(0), Int(0), Int(2)}) ==
        MVec4{Int(0), Int(1), Int(-3), Int(2)});
  CHECK(psi1(MVec4{Int(0), Int(0), Int(0), Int(0)}) == Vec4{Int(0), Int(0), Int(0), Int(0)});

  CHECK_THROWS_AS(mvec4(s, 1, 1, 0, 0), DomainViolation);
  CHECK_THROWS_AS(tvec4(s, 1, 1, 0, 1), DomainViolation);

  test::Rng rng(17);
  for (int round = 0; round < 200; ++round) {
    ShearParam sp{test::rand_int(rng, 1, 4)};
    Vec2I v{Int(test::rand_int(rng, -8, 8)), Int(test::rand_int(rng, -8, 8))};
    // round trips
    CHECK(theta1_inv(theta1(v)) == v);
    CHECK(theta2_inv(theta2(v)) == v);
    MVec4 m = mvec_of_chart1(sp, v);
    CHECK(psi1(m) == theta1(v));
    CHECK(chart1_of_mvec(m) == v);
    // the commuting square: psi2 after psi1_inv is the mutation
    CHECK(psi2(m) == theta2(mutate(sp, v)));
  }
}

TEST_CASE("point-model bijection") {
  ShearParam s{1};
  CHECK(upsilon(s, point_from_triple(s, 1, -1, 1)) ==
        TVec4{Int(1), Int(-2), Int(-1), Int(0)});
  CHECK(phi(s, TVec4{Int(0), Int(0), Int(0), Int(0)}) == point_from_triple(s, 0, 0, 0));
  PointTriple p = point_from_triple(s, -2, 2, 1);
  CHECK(phi(s, upsilon(s, p)) == p);

  test::Rng rng(19);
  for (int round = 0; round < 200; ++round) {
    ShearParam sp{test::rand_int(rng, 1, 4)};
    PointTriple q = test::rand_valid_triple(rng, sp, 8);
    TVec4 t = upsilon(sp, q);
    CHECK(phi(sp, t) == q);
    // phi(t) evaluated on an element-model vector is the inner product
    Vec2I v{Int(test::rand_int(rng, -8, 8)), Int(test::rand_int(rng, -8, 8))};
    MVec4 m = mvec_of_chart1(sp, v);
    Rational by_point = evaluate_on_mvec(sp, q, m);
    Rational by_pairing = Rational(t.alpha1 * m.w1 + t.alpha2 * m.w2 + t.beta1 * m.z1);
    CHECK(by_point == by_pairing);
  }
}

TEST_CASE("the point-model bijection is additive on each piece") {
  test::Rng rng(151);
  for (int round = 0; round < 150; ++round) {
    ShearParam s{test::rand_int(rng, 1, 4)};
    // same-sign beta1 keeps both vectors in one piece of the point model
    long long b1 = test::rand_int(rng, 0, 6), b2 = test::rand_int(rng, 0, 6);
    if (test::rand_int(rng, 0, 1) == 0) {
      b1 = -b1;
      b2 = -b2;
    }
    auto make = [&](long long beta) {
      long long a1 = test::rand_int(rng, -6, 6);
      long long a2 = s.s * std::min(beta, 0LL) - a1;
      return tvec4(s, a1, a2, beta, 0);
    };
    TVec4 t1 = make(b1), t2 = make(b2);
    TVec4 sum = tvec4(s, t1.alpha1 + t2.alpha1, t1.alpha2 + t2.alpha2,
                      t1.beta1 + t2.beta1, 0);
    PointTriple p1 = phi(s, t1), p2 = phi(s, t2), ps = phi(s, sum);
    CHECK(ps == PointTriple{p1.a + p2.a, p1.b + p2.b, p1.c + p2.c});
    for (int probe = 0; probe < 10; ++probe) {
      Element m = test::rand_element(rng, 8);
      CHECK(evaluate(s, ps, m) == evaluate(s, p1, m) + evaluate(s, p2, m));
    }
  }
}

TEST_CASE("pairing in model coordinates") {
  ShearParam s{1};
  CHECK(tilde_w(s, MVec4{Int(0), Int(0), Int(1), Int(-1)}) ==
        TVec4{Int(-1), Int(1), Int(0), Int(0)});
  for (long long sv = 1; sv <= 3; ++sv)
    CHECK(tilde_w(ShearParam{sv}, MVec4{Int(1), Int(0), Int(0), Int(0)}) ==
          TVec4{Int(0), Int(-sv), Int(-1), Int(0)});
  CHECK(tilde_w(s, MVec4{Int(0), Int(0), Int(0), Int(0)}) ==
        TVec4{Int(0), Int(0), Int(0), Int(0)});

  test::Rng rng(23);
  for (int round = 0; round < 200; ++round) {
    ShearParam sp{test::rand_int(rng, 1, 4)};
    Vec2I v{Int(test::rand_int(rng, -8, 8)), Int(test::rand_int(rng, -8, 8))};
    MVec4 m = mvec_of_chart1(sp, v);
    CHECK(phi(sp, tilde_w(sp, m)) == dual_pairing_w(sp, Element{v}));
  }
}

TEST_CASE("evaluation on model vectors") {
  ShearParam s{1};
  MVec4 v{Int(0), Int(0), Int(1), Int(-1)};
  CHECK(evaluate_on_mvec(s, point_from_triple(s, 1, -1, 1), v) == -1);
  CHECK(evaluate_on_mvec(s, point_from_triple(s, -2, 2, 1), v) == -1);
  CHECK(evaluate_on_mvec(s, point_from_triple(s, 1, -3, -2), v) == 2);
}

TEST_CASE("primitive scaling") {
  PointTriple p{Rational(1, 2), Rational(-1, 2), Rational(3, 2)};
  CHECK(primitive_triple(p) == PointTriple{Rational(1), Rational(-1), Rational(3)});
  PointTriple z{Rational(0), Rational(0), Rational(0)};
  CHECK(primitive_triple(z) == z);

  test::Rng rng(29);
  for (int round = 0; round < 100; ++round) {
    ShearParam sp{test::rand_int(rng, 1, 3)};
    PointTriple q = test::rand_valid_triple(rng, sp, 6);
    Rational k = test::rand_rational(rng, 4, 5);
    if (k <= 0) continue;
    PointTriple scaled{q.a * k, q.b * k, q.c * k};
    CHECK(on_point_locus(sp, scaled.a, scaled.b, scaled.c));
    if (!(q.a == 0 && q.b == 0 && q.c == 0))
      CHECK(primitive_triple(scaled) == primitive_triple(q));
  }
}
