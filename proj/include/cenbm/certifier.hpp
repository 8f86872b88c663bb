#pragma once

// Certificates for the centroid Banach-Mazur distance between the square
// S = [-1, 1]^2 and a triangle being exactly 5/2.
//
// Lower bound: for every triangle in S with centroid o, the gauge of S with
// respect to the triangle is at least 5/2. After normalization one vertex is
// a = (1, alpha) and the opposite side has midpoint (-1/2, -alpha/2).
//   Case 1 (b reaches bd S first): b = (-1, beta), c = (0, -alpha - beta).
//   Case 2 (c reaches bd S first): b = (-1 - gamma, 1 - alpha), c = (gamma, -1).
//   alpha = 0: b, c symmetric about (-1/2, 0) on the top and bottom sides.
// For each family, an edge line of the 5/2-scaled triangle meets S.
//
// Upper bound: the witness triangles attain gauge exactly 5/2.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cenbm/certificate.hpp"
#include "cenbm/geometry.hpp"

namespace cenbm {

inline const Rational kCriticalRatio = Q(5, 2);

/// alpha in (0, 1], beta in [-alpha, 1 - alpha].
struct Case1Params {
  Rational alpha;
  Rational beta;

  Case1Params(Rational alpha, Rational beta);
};

/// alpha in (0, 1], gamma in [-1, 0].
struct Case2Params {
  Rational alpha;
  Rational gamma;

  Case2Params(Rational alpha, Rational gamma);
};

/// a = (1, alpha), b = (-1, beta), c = (0, -alpha - beta); throws
/// "degenerate triangle" at beta = -alpha.
Triangle case1_triangle(const Case1Params& p);

/// Lines through the 5/2-scaled vertices: (l_{a'c'}, l_{b'c'}).
std::pair<Line2, Line2> case1_scaled_lines(const Case1Params& p);

/// Abscissa where l_{a'c'} meets y = -1: (5 alpha + 5 beta - 2) / (4 alpha + 2 beta).
Rational case1_bottom_crossing(const Case1Params& p);

/// Ordinate where l_{b'c'} meets x = -1: -(3/2) alpha - (1/2) beta.
Rational case1_left_crossing(const Case1Params& p);

/// a = (1, alpha), b = (-1 - gamma, 1 - alpha), c = (gamma, -1).
Triangle case2_triangle(const Case2Params& p);

/// Lines through the 5/2-scaled vertices: (l_{a'b'}, l_{b'c'}, l_{a'c'}).
std::array<Line2, 3> case2_scaled_lines(const Case2Params& p);

/// Case 2 covering curves in the (alpha, gamma) plane.
///   g_ab = (1 - 4 alpha) / (-2 + 5 alpha)   (pole at 2/5)
///   g_bc = (1 - 2 alpha) / (-4 + 5 alpha)   (pole at 4/5)
///   g_ac = (-1 + 2 alpha) / (2 + 5 alpha)
/// Each throws std::domain_error("threshold undefined") at its pole.
Rational threshold_ab(const Rational& alpha);
Rational threshold_bc(const Rational& alpha);
Rational threshold_ac(const Rational& alpha);

struct Case2Thresholds {
  Rational g_ab;
  Rational g_bc;
  Rational g_ac;
};
Case2Thresholds case2_thresholds(const Rational& alpha);

/// Numerator and denominator polynomials (in alpha) of a covering curve;
/// name is "ab", "bc", "ac" or "zero".
std::pair<Polynomial, Polynomial> threshold_fraction(const std::string& name);

/// beta = intercept + slope * alpha.
struct LinearThreshold {
  Rational intercept;
  Rational slope;

  [[nodiscard]] Rational at(const Rational& alpha) const { return intercept + slope * alpha; }
  [[nodiscard]] Json to_json() const { return Json{{"intercept", intercept.str()}, {"slope", slope.str()}}; }
  static LinearThreshold from_json(const Json& j);
};

/// Halfplane descriptions of where each Case 1 line reaches its side of S:
/// l_{a'c'} meets the bottom side iff beta <= (2 - alpha)/3, l_{b'c'} meets
/// the left side iff beta <= 2 - 3 alpha.
struct Case1Thresholds {
  LinearThreshold ac{Q(2, 3), Q(-1, 3)};
  LinearThreshold bc{Rational(2), Rational(-3)};
};

struct CoverConfig {
  Rational grid_step = Q(1, 64);
  Case1Thresholds case1;
};

/// Exact sweep over a rational grid of a parameter family. Returns
/// {points, failures, first_failure?}. Kinds:
///   case1_coverage, case1_soundness_ac, case1_soundness_bc,
///   case1_printed_forms, case1_gauge_floor,
///   case2_coverage, case2_soundness_ab, case2_soundness_bc,
///   case2_soundness_ac, case2_printed_forms, case2_gauge_floor.
/// Threshold-dependent kinds read `case1` thresholds.
Json grid_sweep(const std::string& kind, const Rational& step, const Case1Thresholds& case1 = {});

/// Uncovered part of the Case 1 region as a constraint list.
std::vector<LinearConstraint2> case1_uncovered_region(const Case1Thresholds& t);

/// The two extremal triangles: (1, 1/2), (-1, 1/2), (0, -1) and
/// (1, 1/5), (-4/5, 4/5), (-1/5, -1).
std::vector<Triangle> extremal_triangles();

Certificate witness_check(const std::vector<Triangle>& triangles = extremal_triangles());
Certificate case1_cover(const CoverConfig& cfg = {});
Certificate case2_cover(const CoverConfig& cfg = {});

/// alpha = 0 families: case 1 parametrizes b = (t, 1), case 2 parametrizes
/// c = (s, -1), both over [-1, 0].
Certificate subcase_alpha_zero(int case_id);

/// Triangle of the alpha = 0 family in the case-1 parametrization b = (t, 1).
Triangle alpha_zero_triangle(const Rational& t);

struct LedgerEntry {
  std::string name;
  Certificate certificate;
};

struct ProofLedger {
  std::vector<LedgerEntry> entries;
  bool verdict = false;

  [[nodiscard]] Json to_json() const;
  /// Name of the first failing entry, empty if all pass.
  [[nodiscard]] std::string first_failure() const;
};

inline constexpr const char* kTheoremStatement = "delta_cen(P,T)=5/2";

/// Entries: witness, case1_cover, case2_cover, subcase_1_2, subcase_2_2.
ProofLedger certify_theorem(const CoverConfig& cfg = {});

}  // namespace cenbm
