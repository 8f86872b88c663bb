#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cenbm/json.hpp"
#include "cenbm/point.hpp"
#include "cenbm/polynomial.hpp"

namespace cenbm {

/// Machine-checkable record of one proof step. `inputs` fixes the statement,
/// `steps` the exact facts that establish it; replay recomputes both.
/// Serialized as {kind, inputs, steps, verdict}.
struct Certificate {
  std::string kind;
  Json inputs = Json::object();
  Json steps = Json::array();
  bool verdict = false;
  std::string reason;  // first failing check, empty on pass

  [[nodiscard]] bool ok() const { return verdict; }
  void fail(std::string why) {
    if (reason.empty()) reason = std::move(why);
    verdict = false;
  }

  [[nodiscard]] Json to_json() const;
  static Certificate from_json(const Json& j);
};

// ---------------------------------------------------------------------------
// Polynomial sign certificates

enum class SignRequirement { NonNegative, NonPositive, Positive, Negative };

std::string to_string(SignRequirement r);
SignRequirement sign_requirement_from_string(const std::string& s);

/// Certifies that p has the required sign on every point of iv.
/// Interior: the sign-change polynomial (p itself for strict requirements,
/// its odd-multiplicity part otherwise) has no roots in the open interior,
/// and p has the right sign at one interior sample. Closed ends are checked
/// by direct evaluation. Throws for a zero polynomial with a strict
/// requirement.
Certificate certify_sign_on_interval(const Polynomial& p, const Interval& iv, SignRequirement required);

// ---------------------------------------------------------------------------
// Planar linear-inequality regions

enum class Relation { LessEqual, Less };

/// a*x + b*y (<= | <) c
struct LinearConstraint2 {
  Rational a;
  Rational b;
  Rational c;
  Relation rel = Relation::LessEqual;

  LinearConstraint2(Rational a, Rational b, Rational c, Relation rel = Relation::LessEqual);

  static LinearConstraint2 le(Rational a, Rational b, Rational c) { return {a, b, c, Relation::LessEqual}; }
  static LinearConstraint2 lt(Rational a, Rational b, Rational c) { return {a, b, c, Relation::Less}; }
  static LinearConstraint2 ge(const Rational& a, const Rational& b, const Rational& c) { return {-a, -b, -c, Relation::LessEqual}; }
  static LinearConstraint2 gt(const Rational& a, const Rational& b, const Rational& c) { return {-a, -b, -c, Relation::Less}; }

  [[nodiscard]] bool strict() const { return rel == Relation::Less; }
  /// c - (a*x + b*y); the constraint holds iff slack >= 0 (or > 0 if strict).
  [[nodiscard]] Rational slack(const Point2& p) const { return c - (a * p.x + b * p.y); }
  [[nodiscard]] bool satisfied(const Point2& p) const;

  [[nodiscard]] Json to_json() const;
  static LinearConstraint2 from_json(const Json& j);
};

struct BoundingBox {
  Interval x = Interval::closed(-10, 10);
  Interval y = Interval::closed(-10, 10);
};

struct RegionResult {
  Certificate certificate;
  std::optional<Point2> witness;  // set iff the region is nonempty

  [[nodiscard]] bool empty() const { return certificate.ok(); }
};

/// Decides emptiness of the conjunction of `constraints` inside the box by
/// exact successive halfplane clipping. Strict constraints are clipped as
/// non-strict; the region is empty iff the clipped polygon is empty or some
/// strict constraint has maximal slack <= 0 over it. Throws
/// std::invalid_argument("vacuous query") for an empty list.
RegionResult region_empty(const std::vector<LinearConstraint2>& constraints, const BoundingBox& box = {});

/// Clip a convex vertex list (possibly degenerate) against a*x + b*y <= c.
std::vector<Point2> clip_halfplane(const std::vector<Point2>& poly, const LinearConstraint2& h);

}  // namespace cenbm
