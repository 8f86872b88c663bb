#pragma once

// Exact planar convex geometry over the rationals.

#include <optional>
#include <string>
#include <vector>

#include "cenbm/json.hpp"
#include "cenbm/point.hpp"
#include "cenbm/rational.hpp"

namespace cenbm {

/// a*x + b*y = c, normalized: integer coefficients with gcd 1 and the first
/// nonzero of (a, b) positive.
class Line2 {
 public:
  Line2(Rational a, Rational b, Rational c);
  static Line2 through(const Point2& p, const Point2& q);

  [[nodiscard]] const Rational& a() const { return a_; }
  [[nodiscard]] const Rational& b() const { return b_; }
  [[nodiscard]] const Rational& c() const { return c_; }

  /// a*x + b*y - c; zero on the line.
  [[nodiscard]] Rational eval(const Point2& p) const { return a_ * p.x + b_ * p.y - c_; }
  [[nodiscard]] int side(const Point2& p) const { return eval(p).sign(); }

  friend bool operator==(const Line2&, const Line2&) = default;
  [[nodiscard]] std::string str() const;

 private:
  Rational a_, b_, c_;
};

/// Intersection point, or nullopt when the lines are parallel or coincide.
std::optional<Point2> line_intersection(const Line2& l1, const Line2& l2);

/// True iff the line meets the closed segment pq.
bool line_meets_segment(const Line2& l, const Point2& p, const Point2& q);

enum class Containment { Closed, Open };

/// Strictly convex polygon with counterclockwise vertex order. The
/// constructor reorients clockwise input and rejects anything else with a
/// diagnostic naming the offending vertex triple.
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Point2> vertices);

  /// Axis-aligned square [-h, h]^2.
  static ConvexPolygon square(const Rational& half_side = 1);

  [[nodiscard]] const std::vector<Point2>& vertices() const { return v_; }
  [[nodiscard]] std::size_t size() const { return v_.size(); }
  [[nodiscard]] const Point2& operator[](std::size_t i) const { return v_[i]; }
  /// Twice the (positive) area.
  [[nodiscard]] Rational twice_area() const;

  /// Same vertex cycle up to rotation.
  [[nodiscard]] bool same_as(const ConvexPolygon& other) const;

  [[nodiscard]] Json to_json() const;
  static ConvexPolygon from_json(const Json& j);

 private:
  std::vector<Point2> v_;
};

class Triangle {
 public:
  /// Reorients to positive order; throws std::invalid_argument("degenerate
  /// triangle") for collinear input.
  Triangle(Point2 a, Point2 b, Point2 c);

  [[nodiscard]] const Point2& a() const { return a_; }
  [[nodiscard]] const Point2& b() const { return b_; }
  [[nodiscard]] const Point2& c() const { return c_; }
  [[nodiscard]] Point2 centroid() const;
  [[nodiscard]] ConvexPolygon polygon() const { return ConvexPolygon({a_, b_, c_}); }
  [[nodiscard]] std::vector<Point2> vertices() const { return {a_, b_, c_}; }

  friend bool operator==(const Triangle&, const Triangle&) = default;

 private:
  Point2 a_, b_, c_;
};

struct AffineMap2 {
  Rational m11{1}, m12{0}, m21{0}, m22{1};
  Rational t1{0}, t2{0};

  static AffineMap2 identity() { return {}; }
  static AffineMap2 linear(Rational m11, Rational m12, Rational m21, Rational m22) {
    return {std::move(m11), std::move(m12), std::move(m21), std::move(m22), 0, 0};
  }

  [[nodiscard]] Rational det() const { return m11 * m22 - m12 * m21; }
  [[nodiscard]] Point2 operator()(const Point2& p) const {
    return {m11 * p.x + m12 * p.y + t1, m21 * p.x + m22 * p.y + t2};
  }
  [[nodiscard]] Json to_json() const;
};

/// Area centroid.
Point2 polygon_centroid(const ConvexPolygon& p);

bool contains_point(const ConvexPolygon& p, const Point2& q, Containment mode);

/// Vertex test; sufficient by convexity.
bool contains_polygon(const ConvexPolygon& outer, const ConvexPolygon& inner, Containment mode);

/// True iff q lies on an edge of p.
bool on_boundary(const ConvexPolygon& p, const Point2& q);

/// Throws std::invalid_argument for ratio <= 0.
ConvexPolygon homothety(const ConvexPolygon& p, const Point2& center, const Rational& ratio);
Triangle homothety(const Triangle& t, const Point2& center, const Rational& ratio);

/// Support ratio of C against each edge of D about `center`: writing the
/// edge as n.(x - center) <= h with h > 0, the value is max_v n.(v - center) / h
/// over vertices v of C. Order follows D's edges (edge i joins vertex i and
/// i + 1). Throws std::domain_error("gauge undefined") unless center is
/// interior to D.
std::vector<Rational> edge_supports(const ConvexPolygon& c, const ConvexPolygon& d, const Point2& center);

/// Minimal lambda > 0 with C contained in homothety(D, center, lambda).
Rational gauge_factor(const ConvexPolygon& c, const ConvexPolygon& d, const Point2& center);

/// Triangle (v1, v2, 3g - v1 - v2) in positive order; its centroid is g.
Triangle triangle_from_two_vertices(const Point2& v1, const Point2& v2, const Point2& g);

/// Throws std::invalid_argument for a singular map.
ConvexPolygon apply_affine(const AffineMap2& a, const ConvexPolygon& p);

/// Convex hull of a point set, counterclockwise, collinear points dropped.
ConvexPolygon convex_hull(std::vector<Point2> points);

/// Reflection of p through center.
inline Point2 reflect(const Point2& p, const Point2& center) { return Rational(2) * center - p; }

}  // namespace cenbm
