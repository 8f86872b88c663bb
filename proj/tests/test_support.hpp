#pragma once

// Shared helpers for the test suites: seeded generators and an independent
// barycentric gauge oracle.

#include <random>
#include <vector>

#include "cenbm/geometry.hpp"

namespace cenbm::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

/// Uniform rational k/den with k in [lo*den, hi*den].
inline Rational random_rational(long lo, long hi, long den) {
  std::uniform_int_distribution<long> d(lo * den, hi * den);
  return Rational(d(rng()), den);
}

inline Point2 random_point(long lo, long hi, long den) {
  return {random_rational(lo, hi, den), random_rational(lo, hi, den)};
}

inline Triangle random_triangle(long lo = -5, long hi = 5, long den = 7) {
  while (true) {
    Point2 a = random_point(lo, hi, den), b = random_point(lo, hi, den), c = random_point(lo, hi, den);
    if (!orient(a, b, c).is_zero()) return {a, b, c};
  }
}

/// Random strictly convex polygon: hull of random lattice points.
inline ConvexPolygon random_polygon(int points = 7, long lo = -4, long hi = 4, long den = 3) {
  while (true) {
    std::vector<Point2> pts;
    for (int i = 0; i < points; ++i) pts.push_back(random_point(lo, hi, den));
    try {
      return convex_hull(pts);
    } catch (const std::invalid_argument&) {
    }
  }
}

inline AffineMap2 random_nonsingular_map(long lo = -3, long hi = 3, long den = 4) {
  while (true) {
    AffineMap2 a{random_rational(lo, hi, den), random_rational(lo, hi, den), random_rational(lo, hi, den),
                 random_rational(lo, hi, den), random_rational(lo, hi, den), random_rational(lo, hi, den)};
    if (!a.det().is_zero()) return a;
  }
}

/// Gauge of a body C against a triangle about `center` computed through
/// barycentric coordinates instead of edge supports. Writing v - center as a
/// combination of the triangle's vertices (shifted so their weighted sum is
/// the center), the smallest homothety ratio that covers v is the weight sum
/// after shifting the weights so their minimum is zero.
inline Rational barycentric_gauge(const std::vector<Point2>& body, const Triangle& t, const Point2& center) {
  const Point2 p1 = t.a() - center, p2 = t.b() - center, p3 = t.c() - center;
  Rational best(0);
  bool first = true;
  for (const auto& raw : body) {
    const Point2 v = raw - center;
    // Solve v = m1 p1 + m2 p2 + m3 p3 with m1 + m2 + m3 = s free; fix s by
    // using affine barycentric coordinates (w1, w2, w3), sum 1, of v w.r.t.
    // (p1, p2, p3) and of the origin (o1, o2, o3). Then v/lambda lies in the
    // triangle iff o + (w - o)/lambda >= 0 componentwise.
    auto bary = [&](const Point2& q) {
      const Rational d = orient(p1, p2, p3);
      const Rational w1 = orient(q, p2, p3) / d;
      const Rational w2 = orient(p1, q, p3) / d;
      return std::vector<Rational>{w1, w2, Rational(1) - w1 - w2};
    };
    const auto w = bary(v);
    const auto o = bary({0, 0});
    Rational need(0);
    for (int i = 0; i < 3; ++i) {
      // o_i + (w_i - o_i)/lambda >= 0  <=>  lambda >= (o_i - w_i)/o_i
      const Rational r = (o[i] - w[i]) / o[i];
      need = max(need, r);
    }
    if (first || best < need) best = need;
    first = false;
  }
  return best;
}

}  // namespace cenbm::testing
