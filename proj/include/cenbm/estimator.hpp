#pragma once

// Numeric estimate of the centroid Banach-Mazur distance between convex
// polygons, and an exact brute-force oracle for square vs triangle.

#include <array>
#include <vector>

#include "cenbm/geometry.hpp"

namespace cenbm {

struct SearchConfig {
  int coarse_grid_steps = 24;
  int refinement_rounds = 40;
  Rational shrink_factor = Q(1, 2);
  double tolerance = 5e-3;
  int starts = 256;  // best coarse cells refined, per direction

  /// Throws std::invalid_argument on counts < 1, shrink outside (0, 1) or
  /// tolerance <= 0.
  void validate() const;
  [[nodiscard]] Json to_json() const;
};

/// F(L) = gauge(C, L(D)) * gauge(L(D), C) with both centroids at the origin.
/// Throws std::invalid_argument for singular L (translation part ignored).
Rational objective(const AffineMap2& linear, const ConvexPolygon& c, const ConvexPolygon& d);

struct DistanceEstimate {
  double lambda_hat;
  /// a with a(D) inside C, cen a(D) = cen C, and C inside lambda_hat a(D)
  /// about the centroid.
  AffineMap2 best_map;
  /// (gauge(C, a(D)), gauge(a(D), C)) exactly; their product is the
  /// objective value, the second is 1 after normalization.
  std::array<Rational, 2> exact_gauges;
  /// The search minimum only bounds the infimum from above.
  bool upper_bound = true;

  [[nodiscard]] Rational exact_value() const { return exact_gauges[0] * exact_gauges[1]; }
  [[nodiscard]] Json to_json() const;
};

/// Deterministic search over linear parts. Both bodies are first whitened
/// (vertex second moments to the identity). A coarse grid over rotation,
/// log-stretch and shear, for both orientations, seeds pattern searches on a
/// log-sum-exp smoothing of F that sharpens as the step shrinks. The search
/// runs in both directions, using F(C, D; L) = F(D, C; L^-1), and keeps the
/// better map.
DistanceEstimate estimate_distance(const ConvexPolygon& c, const ConvexPolygon& d, const SearchConfig& cfg = {});

struct OracleResult {
  Rational min_gauge;
  Triangle witness;
  std::size_t triangles;  // valid triangles examined
};

/// Exact minimum of gauge(S, T, o) over triangles T with vertices on the
/// pitch-2/steps grid of S = [-1, 1]^2 and centroid o. Ties resolve to the
/// lexicographically smallest sorted vertex triple. Throws
/// std::invalid_argument for steps < 2 or an empty family.
OracleResult grid_oracle_square_triangle(int steps);

/// Images of t under the 8 symmetries of the square.
std::vector<Triangle> square_symmetry_images(const Triangle& t);

bool equal_up_to_square_symmetry(const Triangle& s, const Triangle& t);

}  // namespace cenbm
