#include <doctest.h>

#include "cenbm/geometry.hpp"
#include "test_support.hpp"

using namespace cenbm;
using namespace cenbm::testing;

namespace {

const Point2 kOrigin{0, 0};

ConvexPolygon delta0() { return ConvexPolygon({{1, Q(1, 2)}, {-1, Q(1, 2)}, {0, -1}}); }

}  // namespace

TEST_CASE("polygon construction validates convexity and orientation") {
  const ConvexPolygon cw({{1, 1}, {1, -1}, {-1, -1}, {-1, 1}});
  CHECK(cw.same_as(ConvexPolygon::square()));
  CHECK(cw.twice_area() == Rational(8));
  CHECK_THROWS_WITH_AS(ConvexPolygon({{0, 0}, {1, 0}, {2, 0}, {1, 1}}),
                       "polygon: vertex triple (0, 1, 2) is not a strict left turn", std::invalid_argument);
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}}), std::invalid_argument);
  // Pentagram winding: every turn is a left turn but the polygon is not convex.
  CHECK_THROWS_AS(ConvexPolygon({{2, 0}, {-2, 1}, {1, -2}, {1, 2}, {-2, -1}}), std::invalid_argument);

  const auto j = ConvexPolygon::square().to_json();
  CHECK(ConvexPolygon::from_json(j).same_as(ConvexPolygon::square()));
  CHECK(j.dump() == R"({"vertices":[["1/1","-1/1"],["1/1","1/1"],["-1/1","1/1"],["-1/1","-1/1"]]})");
}

TEST_CASE("polygon_centroid") {
  CHECK(polygon_centroid(ConvexPolygon::square()) == kOrigin);
  CHECK(polygon_centroid(delta0()) == kOrigin);
  CHECK(polygon_centroid(ConvexPolygon({{0, 0}, {1, 0}, {0, 1}})) == Point2{Q(1, 3), Q(1, 3)});
  // Area centroid differs from the vertex average for a quadrilateral.
  const ConvexPolygon kite({{0, 0}, {4, 0}, {4, 1}, {0, 4}});
  const Point2 vertex_avg{2, Q(5, 4)};
  CHECK(polygon_centroid(kite) != vertex_avg);
}

TEST_CASE("contains_point and contains_polygon") {
  const auto s = ConvexPolygon::square();
  CHECK(contains_point(s, kOrigin, Containment::Open));
  CHECK_FALSE(contains_point(s, {1, Q(1, 2)}, Containment::Open));
  CHECK(contains_point(s, {1, Q(1, 2)}, Containment::Closed));
  CHECK_FALSE(contains_point(s, {2, 0}, Containment::Closed));

  CHECK(contains_polygon(s, delta0(), Containment::Closed));
  const auto scaled = homothety(delta0(), kOrigin, Q(5, 2));
  CHECK(contains_polygon(scaled, s, Containment::Closed));
  CHECK_FALSE(contains_polygon(scaled, s, Containment::Open));
}

TEST_CASE("homothety") {
  CHECK(homothety(delta0(), kOrigin, Q(5, 2))
            .same_as(ConvexPolygon({{Q(5, 2), Q(5, 4)}, {Q(-5, 2), Q(5, 4)}, {0, Q(-5, 2)}})));
  CHECK(homothety(ConvexPolygon::square(), kOrigin, 1).same_as(ConvexPolygon::square()));
  CHECK(homothety(ConvexPolygon::square(), {1, 1}, 2).same_as(ConvexPolygon({{1, 1}, {-3, 1}, {-3, -3}, {1, -3}})));
  CHECK_THROWS_AS(homothety(ConvexPolygon::square(), kOrigin, 0), std::invalid_argument);
  CHECK_THROWS_AS(homothety(ConvexPolygon::square(), kOrigin, -1), std::invalid_argument);
}

TEST_CASE("gauge_factor examples") {
  const auto s = ConvexPolygon::square();
  CHECK(gauge_factor(s, delta0(), kOrigin) == Q(5, 2));
  auto sup = edge_supports(s, delta0(), kOrigin);
  std::sort(sup.begin(), sup.end());
  CHECK(sup == std::vector<Rational>{2, Q(5, 2), Q(5, 2)});

  const ConvexPolygon second({{1, Q(1, 5)}, {Q(-4, 5), Q(4, 5)}, {Q(-1, 5), -1}});
  CHECK(gauge_factor(s, second, kOrigin) == Q(5, 2));
  for (const auto& v : edge_supports(s, second, kOrigin)) CHECK(v == Q(5, 2));

  CHECK(gauge_factor(s, ConvexPolygon({{1, 1}, {-1, 0}, {0, -1}}), kOrigin) == Rational(3));
  CHECK_THROWS_WITH_AS(gauge_factor(s, delta0(), {1, Q(1, 2)}), "gauge undefined", std::domain_error);
  CHECK_THROWS_WITH_AS(gauge_factor(s, delta0(), {5, 5}), "gauge undefined", std::domain_error);
}

TEST_CASE("gauge agrees with the barycentric oracle") {
  for (int i = 0; i < 300; ++i) {
    const Triangle t = random_triangle();
    const ConvexPolygon c = random_polygon();
    CHECK(gauge_factor(c, t.polygon(), t.centroid()) == barycentric_gauge(c.vertices(), t, t.centroid()));
  }
}

TEST_CASE("gauge correctness and minimality") {
  for (int i = 0; i < 200; ++i) {
    const ConvexPolygon c = random_polygon();
    const ConvexPolygon d = random_polygon();
    const Point2 g = polygon_centroid(d);
    const Rational lambda = gauge_factor(c, d, g);
    CHECK(contains_polygon(homothety(d, g, lambda), c, Containment::Closed));
    CHECK_FALSE(contains_polygon(homothety(d, g, lambda * (Rational(1) - Q(1, 1000))), c, Containment::Closed));
  }
}

TEST_CASE("gauge is invariant under linear maps fixing the center") {
  for (int i = 0; i < 200; ++i) {
    const Triangle t = random_triangle();
    const ConvexPolygon d = apply_affine({1, 0, 0, 1, -t.centroid().x, -t.centroid().y}, t.polygon());
    const ConvexPolygon c = random_polygon();
    AffineMap2 a = random_nonsingular_map();
    a.t1 = 0;
    a.t2 = 0;
    CHECK(gauge_factor(apply_affine(a, c), apply_affine(a, d), kOrigin) == gauge_factor(c, d, kOrigin));
  }
}

TEST_CASE("centroid is affine equivariant") {
  for (int i = 0; i < 500; ++i) {
    const ConvexPolygon p = random_polygon();
    const AffineMap2 a = random_nonsingular_map();
    CHECK(polygon_centroid(apply_affine(a, p)) == a(polygon_centroid(p)));
  }
}

TEST_CASE("monotonicity: a larger triangle has a smaller gauge") {
  std::uniform_int_distribution<long> k(10, 97);
  for (int i = 0; i < 500; ++i) {
    const Triangle outer = random_triangle();
    const Point2 g = outer.centroid();
    const Triangle inner = homothety(outer, g, Rational(k(rng()), 97));
    const ConvexPolygon c = random_polygon();
    CHECK(gauge_factor(c, inner.polygon(), g) >= gauge_factor(c, outer.polygon(), g));
  }
}

TEST_CASE("open containment implies closed containment") {
  for (int i = 0; i < 300; ++i) {
    const ConvexPolygon p = random_polygon();
    const ConvexPolygon q = random_polygon(4, -2, 2, 3);
    if (contains_polygon(p, q, Containment::Open)) CHECK(contains_polygon(p, q, Containment::Closed));
  }
}

TEST_CASE("triangle_from_two_vertices") {
  const Triangle t = triangle_from_two_vertices({1, Q(1, 2)}, {-1, Q(1, 2)}, kOrigin);
  CHECK(t.polygon().same_as(delta0()));
  CHECK_THROWS_WITH_AS(triangle_from_two_vertices({1, 0}, {-1, 0}, kOrigin), "degenerate triangle",
                       std::invalid_argument);
  const Rational alpha = Q(2, 7), beta = Q(1, 3);
  const Triangle u = triangle_from_two_vertices({1, alpha}, {-1, beta}, kOrigin);
  const auto v = u.vertices();
  CHECK(std::find(v.begin(), v.end(), Point2{0, -alpha - beta}) != v.end());
  CHECK(orient(u.a(), u.b(), u.c()).sign() > 0);
}

TEST_CASE("line_intersection") {
  const Rational alpha = Q(1, 3), beta = Q(1, 4);
  // l_{b'c'} through b' = (-5/2, 5/2 beta) and c' = (0, -5/2 (alpha + beta)).
  const Line2 lbc = Line2::through({Q(-5, 2), Q(5, 2) * beta}, {0, Q(-5, 2) * (alpha + beta)});
  const auto f = line_intersection(lbc, Line2(1, 0, -1));
  REQUIRE(f.has_value());
  CHECK(*f == Point2{-1, Q(-3, 2) * alpha - Q(1, 2) * beta});
  CHECK(line_intersection(Line2(1, 0, 0), Line2(0, 1, 0)) == Point2{0, 0});
  CHECK_FALSE(line_intersection(Line2(0, 1, 1), Line2(0, 1, -1)).has_value());
  CHECK_FALSE(line_intersection(Line2(0, 2, 2), Line2(0, 1, 1)).has_value());
}

TEST_CASE("line normalization") {
  const Line2 l(Q(-1, 2), Q(3, 4), Q(5, 6));
  CHECK(l.a() == Rational(6));
  CHECK(l.b() == Rational(-9));
  CHECK(l.c() == Rational(-10));
  CHECK(Line2(0, -2, 4) == Line2(0, 1, -2));
  CHECK_THROWS_AS(Line2(0, 0, 1), std::invalid_argument);
}

TEST_CASE("apply_affine") {
  const auto s = ConvexPolygon::square();
  CHECK(apply_affine(AffineMap2::identity(), s).same_as(s));
  CHECK(apply_affine(AffineMap2::linear(Q(1, 2), 0, 0, Q(1, 2)), s).same_as(ConvexPolygon::square(Q(1, 2))));
  const auto mirrored = apply_affine(AffineMap2::linear(1, 0, 0, -1), delta0());
  CHECK(mirrored.same_as(ConvexPolygon({{1, Q(-1, 2)}, {0, 1}, {-1, Q(-1, 2)}})));
  CHECK(mirrored.twice_area().sign() > 0);
  CHECK_THROWS_AS(apply_affine(AffineMap2::linear(1, 2, 2, 4), s), std::invalid_argument);
}

TEST_CASE("convex_hull drops interior and collinear points") {
  const auto h = convex_hull({{0, 0}, {2, 0}, {1, 0}, {2, 2}, {0, 2}, {1, 1}, {0, 1}});
  CHECK(h.same_as(ConvexPolygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}})));
}
