#pragma once

// Ratio-3 Claim for centrally symmetric bodies, its 3D cube/simplex
// analogue, and sampling for the ratio-4 conjecture.

#include <array>
#include <vector>

#include "cenbm/certificate.hpp"
#include "cenbm/geometry.hpp"

namespace cenbm {

/// Hull of T and its reflection through `center`; always six vertices.
/// Throws std::invalid_argument if `center` is not the centroid of T.
ConvexPolygon hexagon_hull(const Triangle& t, const Point2& center);

/// Union of two triangles symmetric about `center`. The lines (a, b_s),
/// (b, c_s), (c, a_s) bound `plus`; `minus` is its reflection.
struct Star {
  Triangle plus;
  Triangle minus;
  Point2 center;
};

Star star_of_triangle(const Triangle& t, const Point2& center);

/// Certifies the hexagon lies in both star triangles and that both star
/// triangles lie in the 3x homothet of T about its centroid.
Certificate claim_check(const Triangle& t);

/// The medial triangle -(1/2)(T - g) + g, inscribed in T with the same
/// centroid g.
Triangle medial_triangle(const Triangle& t);

/// Throws std::invalid_argument("polygon is not centrally symmetric") unless
/// the vertex set is closed under reflection through the centroid.
void require_central_symmetry(const ConvexPolygon& m);

/// Triangles with all vertices on bd M and centroid equal to centroid(M).
/// v1 runs over `per_edge` equally spaced points on every edge; for each
/// ordered pair of edges (e2, e3), v2 on e2 is solved exactly so that
/// v3 = 3g - v1 - v2 lands on e3 (sampled at the same pitch when the
/// solution is a whole segment). Degenerate and duplicate triangles are
/// dropped; output order is deterministic.
std::vector<Triangle> inscribed_centroid_triangles(const ConvexPolygon& m, int per_edge);

struct ScanResult {
  Rational max_gauge;
  Triangle witness;
  std::size_t samples;
};

/// Max of gauge_factor(M, T, g) over inscribed_centroid_triangles(M, per_edge)
/// for centrally symmetric M. Throws std::invalid_argument("family empty at
/// this resolution") when no triangle is found.
ScanResult claim_scan(const ConvexPolygon& m, int per_edge);

/// Same scan without the symmetry precondition.
ScanResult conjecture_scan(const ConvexPolygon& c, int per_edge);

// Minimal 3D support for the cube/simplex remark.

struct Point3 {
  Rational x, y, z;

  friend bool operator==(const Point3&, const Point3&) = default;
  [[nodiscard]] Json to_json() const { return Json::array({x.str(), y.str(), z.str()}); }
  static Point3 from_json(const Json& j);
};

struct Simplex3 {
  std::array<Point3, 4> v;

  /// Throws std::invalid_argument("degenerate simplex") for zero volume.
  explicit Simplex3(std::array<Point3, 4> vertices);
  [[nodiscard]] Rational signed_volume6() const;
  [[nodiscard]] Point3 centroid() const;
  [[nodiscard]] Json to_json() const;
  static Simplex3 from_json(const Json& j);
};

struct Box3 {
  Point3 center;
  Point3 half;  // positive half-extents

  [[nodiscard]] std::array<Point3, 8> vertices() const;
  [[nodiscard]] bool contains(const Point3& p) const;
  [[nodiscard]] Json to_json() const { return Json{{"center", center.to_json()}, {"half", half.to_json()}}; }
  static Box3 from_json(const Json& j);
};

/// Smallest lambda with box - g contained in lambda (simplex - g), g the
/// simplex centroid: max over faces n.x <= h of max over box vertices of
/// n.(v - g) / h.
Rational gauge3(const Box3& box, const Simplex3& s);

/// Cube [-1, 1]^3 against the simplex on four pairwise non-adjacent corners.
Certificate cube_simplex_check();

}  // namespace cenbm
