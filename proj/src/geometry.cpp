#include "cenbm/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace cenbm {

Line2::Line2(Rational a, Rational b, Rational c) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("line: (a, b) = (0, 0)");
  mpz_class l = 1;
  for (const Rational* r : {&a, &b, &c}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r->den().get_mpz_t());
  mpz_class g = 0;
  for (const Rational* r : {&a, &b, &c}) {
    mpz_class n = r->num() * (l / r->den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(l, g);
  const int lead = a.is_zero() ? b.sign() : a.sign();
  if (lead < 0) scale = -scale;
  a_ = a * scale;
  b_ = b * scale;
  c_ = c * scale;
}

Line2 Line2::through(const Point2& p, const Point2& q) {
  if (p == q) throw std::invalid_argument("line: coincident points");
  const Rational a = q.y - p.y;
  const Rational b = p.x - q.x;
  return {a, b, a * p.x + b * p.y};
}

std::string Line2::str() const { return a_.str() + "*x + " + b_.str() + "*y = " + c_.str(); }

std::optional<Point2> line_intersection(const Line2& l1, const Line2& l2) {
  const Rational det = l1.a() * l2.b() - l1.b() * l2.a();
  if (det.is_zero()) return std::nullopt;
  return Point2{(l1.c() * l2.b() - l1.b() * l2.c()) / det, (l1.a() * l2.c() - l1.c() * l2.a()) / det};
}

bool line_meets_segment(const Line2& l, const Point2& p, const Point2& q) {
  const int sp = l.side(p);
  const int sq = l.side(q);
  return sp == 0 || sq == 0 || sp != sq;
}

// ---------------------------------------------------------------------------

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices) : v_(std::move(vertices)) {
  const std::size_t n = v_.size();
  if (n < 3) throw std::invalid_argument("polygon: need at least 3 vertices, got " + std::to_string(n));
  Rational area2(0);
  for (std::size_t i = 0; i < n; ++i) area2 += cross(v_[i], v_[(i + 1) % n]);
  if (area2.sign() < 0) std::reverse(v_.begin(), v_.end());
  auto triple = [n](std::size_t i, std::size_t j, std::size_t k) {
    return "(" + std::to_string(i % n) + ", " + std::to_string(j % n) + ", " + std::to_string(k % n) + ")";
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (orient(v_[i], v_[(i + 1) % n], v_[(i + 2) % n]).sign() <= 0)
      throw std::invalid_argument("polygon: vertex triple " + triple(i, i + 1, i + 2) +
                                  " is not a strict left turn");
  }
  // Local left turns alone admit self-overlapping windings; require every
  // vertex strictly left of every edge it is not on.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      if (orient(v_[i], v_[(i + 1) % n], v_[j]).sign() <= 0)
        throw std::invalid_argument("polygon: vertex triple " + triple(i, i + 1, j) + " violates convex position");
    }
  }
}

ConvexPolygon ConvexPolygon::square(const Rational& h) {
  return ConvexPolygon({{h, -h}, {h, h}, {-h, h}, {-h, -h}});
}

Rational ConvexPolygon::twice_area() const {
  Rational a(0);
  for (std::size_t i = 0; i < v_.size(); ++i) a += cross(v_[i], v_[(i + 1) % v_.size()]);
  return a;
}

bool ConvexPolygon::same_as(const ConvexPolygon& other) const {
  if (other.size() != size()) return false;
  const auto it = std::find(other.v_.begin(), other.v_.end(), v_[0]);
  if (it == other.v_.end()) return false;
  const auto off = static_cast<std::size_t>(it - other.v_.begin());
  for (std::size_t i = 0; i < size(); ++i)
    if (v_[i] != other.v_[(i + off) % size()]) return false;
  return true;
}

Json ConvexPolygon::to_json() const {
  Json verts = Json::array();
  for (const auto& v : v_) verts.push_back(v.to_json());
  return Json{{"vertices", verts}};
}

ConvexPolygon ConvexPolygon::from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.at("vertices").is_array())
    throw std::invalid_argument("polygon: expected {\"vertices\": [[\"x\", \"y\"], ...]}");
  std::vector<Point2> pts;
  for (const auto& p : j.at("vertices")) pts.push_back(Point2::from_json(p));
  return ConvexPolygon(std::move(pts));
}

// ---------------------------------------------------------------------------

Triangle::Triangle(Point2 a, Point2 b, Point2 c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  const int o = orient(a_, b_, c_).sign();
  if (o == 0) throw std::invalid_argument("degenerate triangle");
  if (o < 0) std::swap(b_, c_);
}

Point2 Triangle::centroid() const { return Q(1, 3) * (a_ + b_ + c_); }

Json AffineMap2::to_json() const {
  return Json{{"linear", Json::array({Json::array({m11.str(), m12.str()}), Json::array({m21.str(), m22.str()})})},
              {"translation", Json::array({t1.str(), t2.str()})}};
}

// ---------------------------------------------------------------------------

Point2 polygon_centroid(const ConvexPolygon& p) {
  const auto& v = p.vertices();
  // Fan from v[0]: area-weighted triangle centroids.
  Rational area2(0);
  Point2 acc{0, 0};
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const Rational w = orient(v[0], v[i], v[i + 1]);
    area2 += w;
    acc = acc + w * (v[0] + v[i] + v[i + 1]);
  }
  return (Rational(1) / (Rational(3) * area2)) * acc;
}

bool contains_point(const ConvexPolygon& p, const Point2& q, Containment mode) {
  const auto& v = p.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int s = orient(v[i], v[(i + 1) % v.size()], q).sign();
    if (s < 0 || (s == 0 && mode == Containment::Open)) return false;
  }
  return true;
}

bool contains_polygon(const ConvexPolygon& outer, const ConvexPolygon& inner, Containment mode) {
  return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                     [&](const Point2& q) { return contains_point(outer, q, mode); });
}

bool on_boundary(const ConvexPolygon& p, const Point2& q) {
  return contains_point(p, q, Containment::Closed) && !contains_point(p, q, Containment::Open);
}

ConvexPolygon homothety(const ConvexPolygon& p, const Point2& center, const Rational& ratio) {
  if (ratio.sign() <= 0) throw std::invalid_argument("homothety: ratio must be positive");
  std::vector<Point2> out;
  out.reserve(p.size());
  for (const auto& v : p.vertices()) out.push_back(center + ratio * (v - center));
  return ConvexPolygon(std::move(out));
}

Triangle homothety(const Triangle& t, const Point2& center, const Rational& ratio) {
  if (ratio.sign() <= 0) throw std::invalid_argument("homothety: ratio must be positive");
  auto f = [&](const Point2& v) { return center + ratio * (v - center); };
  return {f(t.a()), f(t.b()), f(t.c())};
}

std::vector<Rational> edge_supports(const ConvexPolygon& c, const ConvexPolygon& d, const Point2& center) {
  const auto& dv = d.vertices();
  std::vector<Rational> out;
  out.reserve(dv.size());
  for (std::size_t i = 0; i < dv.size(); ++i) {
    const Point2& p = dv[i];
    const Point2& q = dv[(i + 1) % dv.size()];
    const Point2 n{q.y - p.y, p.x - q.x};  // outward for counterclockwise order
    const Rational h = dot(n, p - center);
    if (h.sign() <= 0) throw std::domain_error("gauge undefined");
    Rational best = dot(n, c[0] - center);
    for (const auto& v : c.vertices()) best = max(best, dot(n, v - center));
    out.push_back(best / h);
  }
  return out;
}

Rational gauge_factor(const ConvexPolygon& c, const ConvexPolygon& d, const Point2& center) {
  const auto s = edge_supports(c, d, center);
  return *std::max_element(s.begin(), s.end());
}

Triangle triangle_from_two_vertices(const Point2& v1, const Point2& v2, const Point2& g) {
  return {v1, v2, Rational(3) * g - v1 - v2};
}

ConvexPolygon apply_affine(const AffineMap2& a, const ConvexPolygon& p) {
  if (a.det().is_zero()) throw std::invalid_argument("affine map: singular");
  std::vector<Point2> out;
  out.reserve(p.size());
  for (const auto& v : p.vertices()) out.push_back(a(v));
  return ConvexPolygon(std::move(out));
}

ConvexPolygon convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw std::invalid_argument("convex hull: fewer than 3 distinct points");
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && orient(hull[k - 2], hull[k - 1], pts[i - 1]).sign() <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  return ConvexPolygon(std::move(hull));
}

}  // namespace cenbm
