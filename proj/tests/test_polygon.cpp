#include "polyptych/polygon.hpp"

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace polyptych;

namespace {
Vec2 pt(long long x, long long y) { return {Rational(x), Rational(y)}; }
HalfPlane hp(long long nx, long long ny, long long b) {
  return {{Rational(nx), Rational(ny)}, Rational(b)};
}
}  // namespace

TEST_CASE("half-plane intersection classification") {
  Region tri = intersect({hp(1, 0, 0), hp(0, 1, 0), hp(-1, -1, -1)});
  REQUIRE(tri.kind == Region::Kind::bounded);
  CHECK(tri.polygon.verts == std::vector<Vec2>{pt(0, 0), pt(1, 0), pt(0, 1)});

  CHECK(intersect({hp(1, 0, 0), hp(-1, 0, 1)}).kind == Region::Kind::empty);
  CHECK(intersect({hp(1, 0, 0), hp(0, 1, 0), hp(-1, -1, 1)}).kind == Region::Kind::empty);

  Region upper = intersect({hp(0, 1, 0)});
  REQUIRE(upper.kind == Region::Kind::unbounded);
  CHECK(upper.recession == cone_half_plane(Vec2I{Int(1), Int(0)}));

  // trivial constraints
  CHECK(intersect({{{Rational(0), Rational(0)}, Rational(0)}}).kind == Region::Kind::unbounded);
  CHECK(intersect({{{Rational(0), Rational(0)}, Rational(1)}}).kind == Region::Kind::empty);

  // slab feasibility
  CHECK(intersect({hp(1, 0, 0), hp(-1, 0, -3)}).kind == Region::Kind::unbounded);
}

TEST_CASE("vertex canonicalization") {
  Region square = intersect({hp(1, 0, 0), hp(0, 1, 0), hp(-1, 0, -1), hp(0, -1, -1)});
  REQUIRE(square.kind == Region::Kind::bounded);
  CHECK(vertices(square.polygon) == std::vector<Vec2>{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});

  Region tri = intersect({hp(1, 0, 0), hp(0, 1, 0), hp(-1, -1, -1), hp(1, 1, 0)});
  REQUIRE(tri.kind == Region::Kind::bounded);
  CHECK(vertices(tri.polygon).size() == 3);

  ConvexPolygon hull = polygon_from_points({pt(-1, -1), pt(0, 0), pt(0, 1)});
  CHECK(hull.verts == std::vector<Vec2>{pt(-1, -1), pt(0, 0), pt(0, 1)});

  // collinear interior points disappear
  ConvexPolygon seg = polygon_from_points({pt(0, 0), pt(1, 1), pt(2, 2)});
  CHECK(seg.verts == std::vector<Vec2>{pt(0, 0), pt(2, 2)});
  ConvexPolygon quad = polygon_from_points({pt(0, 0), pt(1, 0), pt(2, 0), pt(2, 2), pt(0, 2)});
  CHECK(quad.verts == std::vector<Vec2>{pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)});
}

TEST_CASE("hrep and vrep round trip") {
  test::Rng rng(31);
  for (int round = 0; round < 100; ++round) {
    std::vector<Vec2> pts;
    int n = static_cast<int>(test::rand_int(rng, 1, 8));
    for (int i = 0; i < n; ++i)
      pts.push_back({test::rand_rational(rng, 5, 3), test::rand_rational(rng, 5, 3)});
    ConvexPolygon p = polygon_from_points(pts);
    Region back = intersect(hrep(p));
    REQUIRE(back.kind == Region::Kind::bounded);
    CHECK(back.polygon == p);
  }
}

TEST_CASE("membership agrees with the triangulation oracle") {
  test::Rng rng(37);
  for (int round = 0; round < 60; ++round) {
    std::vector<Vec2> pts;
    int n = static_cast<int>(test::rand_int(rng, 3, 8));
    for (int i = 0; i < n; ++i)
      pts.push_back({Rational(test::rand_int(rng, -5, 5)), Rational(test::rand_int(rng, -5, 5))});
    ConvexPolygon p = polygon_from_points(pts);
    for (int probe = 0; probe < 20; ++probe) {
      Vec2 v{test::rand_rational(rng, 6, 4), test::rand_rational(rng, 6, 4)};
      CHECK(polygon_contains(p, v) == test::polygon_contains_oracle(p, v));
    }
  }
}

TEST_CASE("integrality") {
  CHECK(is_integral(polygon_from_points({pt(0, 1), pt(1, 0), pt(0, -1)})));
  ConvexPolygon half = polygon_from_points({{Rational(1, 2), Rational(0)}, pt(0, 1), pt(0, -1)});
  CHECK_FALSE(is_integral(half));
  CHECK(is_integral(polygon_from_points({pt(0, 0)})));
}

TEST_CASE("normal fan") {
  CHECK_THROWS_AS(normal_fan(polygon_from_points({pt(0, 1), pt(0, -1)})), DegenerateInput);

  ConvexPolygon square = polygon_from_points({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
  auto fan = normal_fan(square);
  CHECK(fan.size() == 4);
  for (const auto& [cone, vert] : fan) CHECK(cone.kind == Cone2::Kind::sector);

  ConvexPolygon tri = polygon_from_points({pt(0, 0), pt(1, 0), pt(0, 1)});
  bool found_origin = false;
  for (const auto& [cone, vert] : normal_fan(tri))
    if (vert == pt(0, 0)) {
      found_origin = true;
      CHECK(cone == cone_sector(Vec2I{Int(1), Int(0)}, Vec2I{Int(0), Int(1)}));
    }
  CHECK(found_origin);

  // the fan covers the plane and reports the true minimizer
  test::Rng rng(41);
  for (int round = 0; round < 50; ++round) {
    std::vector<Vec2> pts;
    for (int i = 0; i < 6; ++i)
      pts.push_back({Rational(test::rand_int(rng, -4, 4)), Rational(test::rand_int(rng, -4, 4))});
    ConvexPolygon p = polygon_from_points(pts);
    if (p.dimension() != 2) continue;
    auto f = normal_fan(p);
    for (int probe = 0; probe < 20; ++probe) {
      Vec2I l{Int(test::rand_int(rng, -5, 5)), Int(test::rand_int(rng, -5, 5))};
      if (l.x == 0 && l.y == 0) continue;
      bool covered = false;
      for (const auto& [cone, vert] : f) {
        if (!cone_contains(cone, l)) continue;
        covered = true;
        Rational claimed = dot(to_rational(l), vert);
        for (const Vec2& v : p.verts) CHECK(claimed <= dot(to_rational(l), v));
      }
      CHECK(covered);
    }
  }
}

TEST_CASE("lattice equivalence") {
  ConvexPolygon square = polygon_from_points({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
  ConvexPolygon tri = polygon_from_points({pt(0, 0), pt(1, 0), pt(0, 1)});
  CHECK_FALSE(lattice_equivalent(square, tri));
  CHECK(lattice_equivalent(square, square));
  CHECK_THROWS_AS(
      lattice_equivalent(square, polygon_from_points({{Rational(1, 2), Rational(0)}, pt(0, 1)})),
      NotIntegral);

  test::Rng rng(43);
  for (int round = 0; round < 60; ++round) {
    std::vector<Vec2> pts;
    int n = static_cast<int>(test::rand_int(rng, 3, 6));
    for (int i = 0; i < n; ++i)
      pts.push_back({Rational(test::rand_int(rng, -3, 3)), Rational(test::rand_int(rng, -3, 3))});
    ConvexPolygon p = polygon_from_points(pts);
    auto u = test::rand_unimodular(rng);
    Vec2I t{Int(test::rand_int(rng, -3, 3)), Int(test::rand_int(rng, -3, 3))};
    std::vector<Vec2> mapped;
    for (const Vec2& v : p.verts)
      mapped.push_back({Rational(u[0][0]) * v.x + Rational(u[0][1]) * v.y + Rational(t.x),
                        Rational(u[1][0]) * v.x + Rational(u[1][1]) * v.y + Rational(t.y)});
    ConvexPolygon q = polygon_from_points(mapped);
    CHECK(lattice_equivalent(p, q));
    CHECK(lattice_equivalent(q, p));  // symmetric

    // transitive across two independent images
    auto u2 = test::rand_unimodular(rng);
    std::vector<Vec2> mapped2;
    for (const Vec2& v : p.verts)
      mapped2.push_back({Rational(u2[0][0]) * v.x + Rational(u2[0][1]) * v.y,
                         Rational(u2[1][0]) * v.x + Rational(u2[1][1]) * v.y});
    CHECK(lattice_equivalent(q, polygon_from_points(mapped2)));
  }
}

TEST_CASE("intersection agrees with direct constraint evaluation") {
  test::Rng rng(137);
  for (int round = 0; round < 150; ++round) {
    std::vector<HalfPlane> hs;
    int n = static_cast<int>(test::rand_int(rng, 1, 6));
    for (int i = 0; i < n; ++i) {
      Vec2 normal{Rational(test::rand_int(rng, -3, 3)), Rational(test::rand_int(rng, -3, 3))};
      if (normal.x == 0 && normal.y == 0) normal.x = 1;
      hs.push_back({normal, Rational(test::rand_int(rng, -4, 4))});
    }
    Region r = intersect(hs);

    auto member = [&](const Vec2& v) {
      for (const HalfPlane& h : hs)
        if (!h.contains(v)) return false;
      return true;
    };
    for (int probe = 0; probe < 25; ++probe) {
      Vec2 v{test::rand_rational(rng, 8, 3), test::rand_rational(rng, 8, 3)};
      bool direct = member(v);
      if (r.kind == Region::Kind::empty) {
        CHECK_FALSE(direct);
      } else if (r.kind == Region::Kind::bounded) {
        CHECK(direct == polygon_contains(r.polygon, v));
      } else {
        CHECK(direct == r.contains(v));
      }
    }
    // classification sanity: a bounded region must reject points far out on
    // every axis direction; an unbounded one must accept arbitrarily far
    // points along its recession cone
    if (r.kind == Region::Kind::unbounded && r.recession.kind != Cone2::Kind::zero) {
      Vec2I dir = r.recession.kind == Cone2::Kind::full ? Vec2I{Int(1), Int(0)}
                                                        : r.recession.r1;
      // find any feasible point, then march along the recession direction
      for (int probe = 0; probe < 400; ++probe) {
        Vec2 v{test::rand_rational(rng, 8, 3), test::rand_rational(rng, 8, 3)};
        if (!member(v)) continue;
        Vec2 far{v.x + Rational(dir.x) * 1000, v.y + Rational(dir.y) * 1000};
        CHECK(member(far));
        break;
      }
    }
  }
}

TEST_CASE("homogeneous cone clipping agrees with the normals") {
  test::Rng rng(139);
  for (int round = 0; round < 200; ++round) {
    std::vector<Vec2I> normals;
    int n = static_cast<int>(test::rand_int(rng, 0, 4));
    for (int i = 0; i < n; ++i) {
      Vec2I v{Int(test::rand_int(rng, -3, 3)), Int(test::rand_int(rng, -3, 3))};
      if (v.x == 0 && v.y == 0) v.x = 1;
      normals.push_back(v);
    }
    Cone2 c = cone_from_normals(normals);
    for (int probe = 0; probe < 30; ++probe) {
      Vec2I v{Int(test::rand_int(rng, -5, 5)), Int(test::rand_int(rng, -5, 5))};
      bool direct = true;
      for (const Vec2I& nn : normals)
        if (dot(nn, v) < 0) direct = false;
      CHECK(cone_contains(c, v) == direct);
    }
  }
}

TEST_CASE("the equivalence map really maps one polygon onto the other") {
  test::Rng rng(149);
  for (int round = 0; round < 60; ++round) {
    std::vector<Vec2> pts;
    int n = static_cast<int>(test::rand_int(rng, 1, 6));
    for (int i = 0; i < n; ++i)
      pts.push_back({Rational(test::rand_int(rng, -3, 3)), Rational(test::rand_int(rng, -3, 3))});
    ConvexPolygon p = polygon_from_points(pts);
    auto u = test::rand_unimodular(rng);
    Vec2I t{Int(test::rand_int(rng, -3, 3)), Int(test::rand_int(rng, -3, 3))};
    std::vector<Vec2> mapped;
    for (const Vec2& v : p.verts)
      mapped.push_back({Rational(u[0][0]) * v.x + Rational(u[0][1]) * v.y + Rational(t.x),
                        Rational(u[1][0]) * v.x + Rational(u[1][1]) * v.y + Rational(t.y)});
    ConvexPolygon q = polygon_from_points(mapped);
    auto found = lattice_equivalence(p, q);
    REQUIRE(found.has_value());
    Int det = found->u[0][0] * found->u[1][1] - found->u[0][1] * found->u[1][0];
    CHECK((det == 1 || det == -1));
    std::vector<Vec2> image;
    for (const Vec2& v : p.verts)
      image.push_back({Rational(found->u[0][0]) * v.x + Rational(found->u[0][1]) * v.y +
                           Rational(found->t.x),
                       Rational(found->u[1][0]) * v.x + Rational(found->u[1][1]) * v.y +
                           Rational(found->t.y)});
    CHECK(polygon_from_points(image) == q);
  }
}

TEST_CASE("dilation") {
  ConvexPolygon tri = polygon_from_points({pt(0, 0), pt(2, 0), pt(0, 2)});
  CHECK(dilate(tri, Rational(1)) == tri);
  CHECK(dilate(tri, Rational(2)).verts == std::vector<Vec2>{pt(0, 0), pt(4, 0), pt(0, 4)});
  CHECK(dilate(tri, Rational(1, 2)).verts == std::vector<Vec2>{pt(0, 0), pt(1, 0), pt(0, 1)});
}

TEST_CASE("cones and refinements") {
  Cone2 quadrant = cone_sector(Vec2I{Int(1), Int(0)}, Vec2I{Int(0), Int(1)});
  CHECK(extreme_rays(quadrant) == std::vector<Vec2I>{{Int(1), Int(0)}, {Int(0), Int(1)}});

  // half-plane refined by {x >= 0} gives the two upper quadrants
  Cone2 upper = cone_half_plane(Vec2I{Int(1), Int(0)});
  Cone2 right = cone_half_plane(Vec2I{Int(0), Int(-1)});  // ccw side = {x >= 0}
  auto pieces = refine_cones({upper, right});
  CHECK(pieces.size() == 2);
  CHECK(pieces[0] == cone_sector(Vec2I{Int(1), Int(0)}, Vec2I{Int(0), Int(1)}));
  CHECK(pieces[1] == cone_sector(Vec2I{Int(0), Int(1)}, Vec2I{Int(-1), Int(0)}));

  // full plane refined by two lines gives four cones
  auto four = refine_cones({cone_full(), cone_line(Vec2I{Int(1), Int(0)}),
                            cone_line(Vec2I{Int(0), Int(1)})});
  CHECK(four.size() == 4);

  // recession-cone construction
  CHECK(cone_from_normals({}) == cone_full());
  CHECK(cone_from_normals({{Int(0), Int(1)}}) == cone_half_plane(Vec2I{Int(1), Int(0)}));
  CHECK(cone_from_normals({{Int(1), Int(0)}, {Int(0), Int(1)}}) ==
        cone_sector(Vec2I{Int(1), Int(0)}, Vec2I{Int(0), Int(1)}));
  CHECK(cone_from_normals({{Int(1), Int(0)}, {Int(-1), Int(0)}}) ==
        cone_line(Vec2I{Int(0), Int(1)}));
  CHECK(cone_from_normals({{Int(1), Int(0)}, {Int(-1), Int(0)}, {Int(0), Int(1)}}) ==
        cone_ray(Vec2I{Int(0), Int(1)}));
  CHECK(cone_from_normals({{Int(1), Int(0)}, {Int(-1), Int(-1)}, {Int(0), Int(1)}}).kind ==
        Cone2::Kind::zero);
}
