#include <doctest.h>

#include <chrono>
#include <cmath>

#include "cenbm/estimator.hpp"
#include "test_support.hpp"

using namespace cenbm;
using namespace cenbm::testing;

namespace {

const auto kSquare = ConvexPolygon::square();
const ConvexPolygon kRefTriangle({{0, 0}, {1, 0}, {0, 1}});
const Triangle kDelta0({1, Q(1, 2)}, {-1, Q(1, 2)}, {0, -1});

// Linear map sending the centered reference triangle to the centered target.
AffineMap2 map_reference_to(const Triangle& t) {
  const Point2 g{Q(1, 3), Q(1, 3)};
  const Point2 u = Point2{1, 0} - g, v = Point2{0, 1} - g;
  const Point2 tg = t.centroid();
  const Point2 a = t.b() - tg, b = t.c() - tg;  // images of u, v
  // Solve M [u v] = [a b].
  const Rational det = u.x * v.y - u.y * v.x;
  return AffineMap2::linear((a.x * v.y - b.x * u.y) / det, (b.x * u.x - a.x * v.x) / det,
                            (a.y * v.y - b.y * u.y) / det, (b.y * u.x - a.y * v.x) / det);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

TEST_CASE("objective examples") {
  const auto l = map_reference_to(kDelta0);
  CHECK(apply_affine(l, ConvexPolygon({{Q(-1, 3), Q(-1, 3)}, {Q(2, 3), Q(-1, 3)}, {Q(-1, 3), Q(2, 3)}}))
            .same_as(ConvexPolygon({{0, -1}, {1, Q(1, 2)}, {-1, Q(1, 2)}})));
  CHECK(objective(l, kSquare, kRefTriangle) == Q(5, 2));
  CHECK(objective(AffineMap2::identity(), kSquare, kSquare) == Rational(1));
  CHECK_THROWS_AS(objective(AffineMap2::linear(1, 2, 2, 4), kSquare, kRefTriangle), std::invalid_argument);
}

TEST_CASE("property: objective is scale invariant and at least 1") {
  for (int i = 0; i < 200; ++i) {
    const auto c = random_polygon(6);
    const auto d = random_polygon(5);
    const auto m = random_nonsingular_map();
    const AffineMap2 l = AffineMap2::linear(m.m11, m.m12, m.m21, m.m22);
    const AffineMap2 l2 = AffineMap2::linear(2 * m.m11, 2 * m.m12, 2 * m.m21, 2 * m.m22);
    const Rational f = objective(l, c, d);
    CHECK(f == objective(l2, c, d));
    CHECK(f >= Rational(1));
  }
}

TEST_CASE("estimate_distance square vs triangle") {
  const auto t0 = std::chrono::steady_clock::now();
  const auto e = estimate_distance(kSquare, kRefTriangle);
  CHECK(seconds_since(t0) < 30.0);
  CHECK(e.lambda_hat >= 2.495);
  CHECK(e.lambda_hat <= 2.505);
  CHECK(e.exact_value() >= Q(5, 2));
  CHECK(e.lambda_hat == e.exact_value().to_double());
  CHECK(e.exact_gauges[1] == Rational(1));
  // The returned map really realizes the reported ratio.
  const auto image = apply_affine(e.best_map, kRefTriangle);
  CHECK(polygon_centroid(image) == Point2{0, 0});
  CHECK(contains_polygon(kSquare, image, Containment::Closed));
  CHECK(gauge_factor(kSquare, image, {0, 0}) == e.exact_value());

  const auto r = estimate_distance(kRefTriangle, kSquare);
  CHECK(std::abs(r.lambda_hat - e.lambda_hat) <= 0.01);
  CHECK(r.lambda_hat >= 2.495);
  CHECK(r.lambda_hat <= 2.505);
}

TEST_CASE("estimate of a body against its affine image is 1") {
  for (int i = 0; i < 5; ++i) {
    const auto c = random_polygon(6);
    const auto d = apply_affine(random_nonsingular_map(), c);
    CHECK(std::abs(estimate_distance(c, d).lambda_hat - 1.0) <= 1e-3);
  }
  const Triangle t = random_triangle();
  CHECK(std::abs(estimate_distance(t.polygon(), kRefTriangle).lambda_hat - 1.0) <= 1e-3);
}

TEST_CASE("property: symmetry on 10 polygon pairs") {
  const SearchConfig cfg;
  for (int i = 0; i < 10; ++i) {
    const auto c = random_polygon(3 + i % 4);
    const auto d = random_polygon(3 + (i + 1) % 5);
    const auto cd = estimate_distance(c, d, cfg);
    const auto dc = estimate_distance(d, c, cfg);
    CHECK(std::abs(cd.lambda_hat - dc.lambda_hat) <= 2 * cfg.tolerance);
    CHECK(cd.exact_value() >= Rational(1));
  }
}

TEST_CASE("property: affine invariance") {
  const SearchConfig cfg;
  for (int i = 0; i < 4; ++i) {
    const auto c = random_polygon(5);
    const auto d = random_polygon(4);
    const auto a = random_nonsingular_map();
    INFO(c.to_json().dump(), " ", d.to_json().dump(), " ", a.to_json().dump());
    CHECK(std::abs(estimate_distance(apply_affine(a, c), d, cfg).lambda_hat - estimate_distance(c, d, cfg).lambda_hat) <=
          2 * cfg.tolerance);
  }
}

TEST_CASE("estimator is deterministic") {
  const auto a = estimate_distance(kSquare, kRefTriangle).to_json().dump();
  const auto b = estimate_distance(kSquare, kRefTriangle).to_json().dump();
  CHECK(a == b);
}

TEST_CASE("search config validation") {
  SearchConfig cfg;
  cfg.coarse_grid_steps = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.shrink_factor = Rational(1);
  CHECK_THROWS_AS(estimate_distance(kSquare, kRefTriangle, cfg), std::invalid_argument);
  cfg = {};
  cfg.tolerance = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("grid oracle") {
  const auto r4 = grid_oracle_square_triangle(4);
  CHECK(r4.min_gauge == Q(5, 2));
  CHECK(equal_up_to_square_symmetry(r4.witness, kDelta0));
  CHECK(r4.witness.centroid() == Point2{0, 0});

  CHECK(grid_oracle_square_triangle(2).min_gauge >= Q(5, 2));
  CHECK_THROWS_AS(grid_oracle_square_triangle(1), std::invalid_argument);

  const auto t0 = std::chrono::steady_clock::now();
  const auto r16 = grid_oracle_square_triangle(16);
  CHECK(seconds_since(t0) < 60.0);
  CHECK(r16.min_gauge == Q(5, 2));
  CHECK(r16.triangles > r4.triangles);
}

TEST_CASE("property: oracle never below 5/2 and nonincreasing on nested grids") {
  Rational previous(1000);
  for (int steps : {2, 4, 8, 16}) {
    const auto r = grid_oracle_square_triangle(steps);
    CHECK(r.min_gauge >= Q(5, 2));
    CHECK(r.min_gauge <= previous);
    previous = r.min_gauge;
  }
  for (int steps = 2; steps <= 12; ++steps) CHECK(grid_oracle_square_triangle(steps).min_gauge >= Q(5, 2));
}

TEST_CASE("square symmetry images") {
  const auto imgs = square_symmetry_images(kDelta0);
  CHECK(imgs.size() == 8);
  for (const auto& t : imgs) {
    CHECK(gauge_factor(kSquare, t.polygon(), {0, 0}) == Q(5, 2));
    CHECK(equal_up_to_square_symmetry(t, kDelta0));
  }
  CHECK_FALSE(equal_up_to_square_symmetry(Triangle({1, 1}, {-1, 0}, {0, -1}), kDelta0));
}
