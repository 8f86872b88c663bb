#include "cenbm/extensions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cenbm/parallel.hpp"
#include "cenbm/steps.hpp"

namespace cenbm {

namespace {

void require_centroid(const Triangle& t, const Point2& center) {
  if (t.centroid() != center) throw std::invalid_argument("center must be the centroid of the triangle");
}

Json tri_json(const Triangle& t) { return t.polygon().to_json(); }

Point3 sub(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Rational dot3(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Point3 cross3(const Point3& a, const Point3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

ScanResult scan(const ConvexPolygon& m, int per_edge) {
  const auto family = inscribed_centroid_triangles(m, per_edge);
  if (family.empty()) throw std::invalid_argument("family empty at this resolution");
  const Point2 g = polygon_centroid(m);
  std::vector<Rational> gauges(family.size());
  parallel_for(family.size(), [&](std::size_t i) { gauges[i] = gauge_factor(m, family[i].polygon(), g); });
  std::size_t best = 0;
  for (std::size_t i = 1; i < gauges.size(); ++i)
    if (gauges[i] > gauges[best]) best = i;
  return {gauges[best], family[best], family.size()};
}

}  // namespace

ConvexPolygon hexagon_hull(const Triangle& t, const Point2& center) {
  require_centroid(t, center);
  std::vector<Point2> pts = t.vertices();
  for (const auto& v : t.vertices()) pts.push_back(reflect(v, center));
  auto hull = convex_hull(std::move(pts));
  if (hull.size() != 6) throw std::logic_error("hexagon hull: expected 6 vertices");
  return hull;
}

Star star_of_triangle(const Triangle& t, const Point2& center) {
  require_centroid(t, center);
  const Point2 &a = t.a(), &b = t.b(), &c = t.c();
  const Line2 l1 = Line2::through(a, reflect(b, center));
  const Line2 l2 = Line2::through(b, reflect(c, center));
  const Line2 l3 = Line2::through(c, reflect(a, center));
  const auto p12 = line_intersection(l1, l2);
  const auto p23 = line_intersection(l2, l3);
  const auto p31 = line_intersection(l3, l1);
  if (!p12 || !p23 || !p31) throw std::invalid_argument("star: parallel prolonged sides");
  Triangle plus(*p12, *p23, *p31);
  Triangle minus(reflect(*p12, center), reflect(*p23, center), reflect(*p31, center));
  return {plus, minus, center};
}

Certificate claim_check(const Triangle& t) {
  const Point2 g = t.centroid();
  const auto hex = hexagon_hull(t, g);
  const auto star = star_of_triangle(t, g);
  const auto triple = homothety(t.polygon(), g, Rational(3));

  Certificate cert;
  cert.kind = "claim";
  cert.inputs = Json{{"triangle", tri_json(t)}, {"center", g.to_json()}, {"ratio", "3/1"}};
  cert.verdict = true;
  const Json yes{{"eq", true}};
  for (const Triangle* s : {&star.plus, &star.minus})
    add_step(cert, "contains", Json{{"outer", tri_json(*s)}, {"inner", hex.to_json()}, {"mode", "closed"}}, yes);
  add_step(cert, "centroid", Json{{"polygon", tri_json(star.plus)}}, Json{{"eq", g.to_json()}});
  for (const Triangle* s : {&star.plus, &star.minus})
    add_step(cert, "contains", Json{{"outer", triple.to_json()}, {"inner", tri_json(*s)}, {"mode", "closed"}}, yes);
  return cert;
}

Triangle medial_triangle(const Triangle& t) {
  const Point2 g = t.centroid();
  auto shrink = [&](const Point2& v) { return g - Q(1, 2) * (v - g); };
  return {shrink(t.a()), shrink(t.b()), shrink(t.c())};
}

void require_central_symmetry(const ConvexPolygon& m) {
  const Point2 g = polygon_centroid(m);
  const auto& v = m.vertices();
  for (const auto& p : v)
    if (std::find(v.begin(), v.end(), reflect(p, g)) == v.end())
      throw std::invalid_argument("polygon is not centrally symmetric");
}

std::vector<Triangle> inscribed_centroid_triangles(const ConvexPolygon& m, int per_edge) {
  if (per_edge < 1) throw std::invalid_argument("inscribed sampling: per_edge must be positive");
  const Point2 g = polygon_centroid(m);
  const Point2 g3 = Rational(3) * g;
  const std::size_t n = m.size();
  auto edge_start = [&](std::size_t i) { return m[i]; };
  auto edge_dir = [&](std::size_t i) { return m[(i + 1) % n] - m[i]; };

  std::vector<Point2> v1s;
  for (std::size_t i = 0; i < n; ++i)
    for (int k = 0; k < per_edge; ++k) v1s.push_back(edge_start(i) + Rational(k, per_edge) * edge_dir(i));

  std::vector<Triangle> out;
  std::set<std::array<Point2, 3>> seen;
  auto keep = [&](const Point2& v1, const Point2& v2) {
    const Point2 v3 = g3 - v1 - v2;
    if (!on_boundary(m, v2) || !on_boundary(m, v3) || orient(v1, v2, v3).is_zero()) return;
    std::array<Point2, 3> key{v1, v2, v3};
    std::sort(key.begin(), key.end());
    if (seen.insert(key).second) out.emplace_back(v1, v2, v3);
  };

  for (const auto& v1 : v1s) {
    for (std::size_t e2 = 0; e2 < n; ++e2) {
      const Point2 p = edge_start(e2), d = edge_dir(e2);
      for (std::size_t e3 = 0; e3 < n; ++e3) {
        // v3 = (g3 - v1 - p) - s d must satisfy orient(q, q + d3, v3) = 0.
        const Point2 q = edge_start(e3), d3 = edge_dir(e3);
        const Point2 base = g3 - v1 - p;
        const Rational c0 = cross(d3, base - q);
        const Rational c1 = -cross(d3, d);
        if (c1.is_zero()) {
          if (!c0.is_zero()) continue;
          for (int k = 0; k <= per_edge; ++k) keep(v1, p + Rational(k, per_edge) * d);
          continue;
        }
        const Rational s = -c0 / c1;
        if (s.sign() < 0 || s > Rational(1)) continue;
        keep(v1, p + s * d);
      }
    }
  }
  return out;
}

ScanResult claim_scan(const ConvexPolygon& m, int per_edge) {
  require_central_symmetry(m);
  return scan(m, per_edge);
}

ScanResult conjecture_scan(const ConvexPolygon& c, int per_edge) { return scan(c, per_edge); }

// ---------------------------------------------------------------------------

Point3 Point3::from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("point3: expected [x, y, z]");
  return {Rational::parse(j[0].get<std::string>()), Rational::parse(j[1].get<std::string>()),
          Rational::parse(j[2].get<std::string>())};
}

Simplex3::Simplex3(std::array<Point3, 4> vertices) : v(std::move(vertices)) {
  if (signed_volume6().is_zero()) throw std::invalid_argument("degenerate simplex");
}

Rational Simplex3::signed_volume6() const { return dot3(sub(v[1], v[0]), cross3(sub(v[2], v[0]), sub(v[3], v[0]))); }

Point3 Simplex3::centroid() const {
  Point3 s{0, 0, 0};
  for (const auto& p : v) s = {s.x + p.x, s.y + p.y, s.z + p.z};
  const Rational q = Q(1, 4);
  return {q * s.x, q * s.y, q * s.z};
}

Json Simplex3::to_json() const {
  Json a = Json::array();
  for (const auto& p : v) a.push_back(p.to_json());
  return Json{{"vertices", a}};
}

Simplex3 Simplex3::from_json(const Json& j) {
  const auto& a = j.at("vertices");
  if (a.size() != 4) throw std::invalid_argument("simplex: expected 4 vertices");
  return Simplex3({Point3::from_json(a[0]), Point3::from_json(a[1]), Point3::from_json(a[2]), Point3::from_json(a[3])});
}

std::array<Point3, 8> Box3::vertices() const {
  std::array<Point3, 8> out;
  for (int i = 0; i < 8; ++i)
    out[i] = {center.x + ((i & 1) ? half.x : -half.x), center.y + ((i & 2) ? half.y : -half.y),
              center.z + ((i & 4) ? half.z : -half.z)};
  return out;
}

bool Box3::contains(const Point3& p) const {
  auto within = [](const Rational& v, const Rational& c, const Rational& h) { return c - h <= v && v <= c + h; };
  return within(p.x, center.x, half.x) && within(p.y, center.y, half.y) && within(p.z, center.z, half.z);
}

Box3 Box3::from_json(const Json& j) {
  Box3 b{Point3::from_json(j.at("center")), Point3::from_json(j.at("half"))};
  if (b.half.x.sign() <= 0 || b.half.y.sign() <= 0 || b.half.z.sign() <= 0)
    throw std::invalid_argument("box: half-extents must be positive");
  return b;
}

Rational gauge3(const Box3& box, const Simplex3& s) {
  const Point3 g = s.centroid();
  Rational best(0);
  for (int f = 0; f < 4; ++f) {
    const Point3& p = s.v[(f + 1) % 4];
    const Point3 n = cross3(sub(s.v[(f + 2) % 4], p), sub(s.v[(f + 3) % 4], p));
    Rational h = dot3(n, sub(p, g));
    // Orient the face normal away from the centroid.
    const Point3 nn = h.sign() < 0 ? Point3{-n.x, -n.y, -n.z} : n;
    h = h.abs();
    for (const auto& v : box.vertices()) best = max(best, dot3(nn, sub(v, g)) / h);
  }
  return best;
}

Certificate cube_simplex_check() {
  const Box3 cube{{0, 0, 0}, {1, 1, 1}};
  const Simplex3 simplex({Point3{1, 1, 1}, Point3{1, -1, -1}, Point3{-1, 1, -1}, Point3{-1, -1, 1}});
  Certificate cert;
  cert.kind = "cube_simplex";
  cert.inputs = Json{{"box", cube.to_json()}, {"simplex", simplex.to_json()}};
  cert.verdict = true;
  const Json args{{"box", cube.to_json()}, {"simplex", simplex.to_json()}};
  add_step(cert, "centroid3", Json{{"simplex", simplex.to_json()}}, Json{{"eq", Point3{0, 0, 0}.to_json()}});
  add_step(cert, "contains3", args, Json{{"eq", true}});
  add_step(cert, "gauge3", args, Json{{"eq", "3/1"}});
  return cert;
}

}  // namespace cenbm
