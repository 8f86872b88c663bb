#include "cenbm/certificate.hpp"

#include <algorithm>
#include <stdexcept>

namespace cenbm {

Json Certificate::to_json() const {
  Json j{{"kind", kind}, {"inputs", inputs}, {"steps", steps}, {"verdict", verdict ? "pass" : "fail"}};
  if (!verdict && !reason.empty()) j["reason"] = reason;
  return j;
}

Certificate Certificate::from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("certificate: expected object");
  Certificate c;
  c.kind = j.at("kind").get<std::string>();
  c.inputs = j.at("inputs");
  c.steps = j.at("steps");
  const auto v = j.at("verdict").get<std::string>();
  if (v != "pass" && v != "fail") throw std::invalid_argument("certificate: verdict must be pass|fail");
  c.verdict = v == "pass";
  if (j.contains("reason")) c.reason = j.at("reason").get<std::string>();
  return c;
}

std::string to_string(SignRequirement r) {
  switch (r) {
    case SignRequirement::NonNegative: return ">=0";
    case SignRequirement::NonPositive: return "<=0";
    case SignRequirement::Positive: return ">0";
    case SignRequirement::Negative: return "<0";
  }
  return "?";
}

SignRequirement sign_requirement_from_string(const std::string& s) {
  if (s == ">=0") return SignRequirement::NonNegative;
  if (s == "<=0") return SignRequirement::NonPositive;
  if (s == ">0") return SignRequirement::Positive;
  if (s == "<0") return SignRequirement::Negative;
  throw std::invalid_argument("unknown sign requirement '" + s + "'");
}

namespace {

bool strict(SignRequirement r) { return r == SignRequirement::Positive || r == SignRequirement::Negative; }

bool sign_ok(int sign, SignRequirement r) {
  switch (r) {
    case SignRequirement::NonNegative: return sign >= 0;
    case SignRequirement::NonPositive: return sign <= 0;
    case SignRequirement::Positive: return sign > 0;
    case SignRequirement::Negative: return sign < 0;
  }
  return false;
}

// Interior rational point of (lo, hi) where p does not vanish. p has finitely
// many roots, so the sequence lo + (hi - lo) / k, k = 2, 3, ... hits one.
Rational interior_sample(const Polynomial& p, const Interval& iv) {
  const Rational width = iv.hi - iv.lo;
  for (long k = 2;; ++k) {
    Rational at = iv.lo + width / Rational(k);
    if (!p(at).is_zero()) return at;
  }
}

}  // namespace

Certificate certify_sign_on_interval(const Polynomial& p, const Interval& iv, SignRequirement required) {
  Certificate cert;
  cert.kind = "sign_on_interval";
  cert.inputs = Json{{"polynomial", p.to_json()}, {"interval", iv.to_json()}, {"required", to_string(required)}};
  cert.verdict = true;

  if (p.is_zero()) {
    if (strict(required)) throw std::domain_error("indeterminate root count");
    cert.steps.push_back(Json{{"check", "identically_zero"}});
    return cert;
  }

  auto check_endpoint = [&](const Rational& at) {
    const Rational v = p(at);
    cert.steps.push_back(Json{{"check", "endpoint"}, {"at", at.str()}, {"value", v.str()}});
    if (!sign_ok(v.sign(), required)) cert.fail("endpoint " + at.str() + " has value " + v.str());
  };

  if (iv.is_point()) {
    check_endpoint(iv.lo);
    return cert;
  }

  const Polynomial sign_poly = strict(required) ? p : odd_multiplicity_part(p);
  cert.steps.push_back(Json{{"check", "sign_polynomial"}, {"coefficients", sign_poly.to_json()}});

  const Interval interior = Interval::open(iv.lo, iv.hi);
  const int roots = sign_poly.degree() == 0 ? 0 : sturm_root_count(sign_poly, interior);
  cert.steps.push_back(Json{{"check", "interior_root_count"}, {"interval", interior.to_json()}, {"value", roots}});
  if (roots != 0) cert.fail("sign polynomial has " + std::to_string(roots) + " root(s) in " + interior.str());

  const Rational sample = interior_sample(p, iv);
  const Rational sv = p(sample);
  cert.steps.push_back(Json{{"check", "sample"}, {"at", sample.str()}, {"value", sv.str()}});
  if (!sign_ok(sv.sign(), required)) cert.fail("sample " + sample.str() + " has value " + sv.str());

  if (!iv.lo_open) check_endpoint(iv.lo);
  if (!iv.hi_open) check_endpoint(iv.hi);
  return cert;
}

// ---------------------------------------------------------------------------

LinearConstraint2::LinearConstraint2(Rational a_, Rational b_, Rational c_, Relation rel_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), rel(rel_) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("linear constraint: (a, b) = (0, 0)");
}

bool LinearConstraint2::satisfied(const Point2& p) const {
  const int s = slack(p).sign();
  return strict() ? s > 0 : s >= 0;
}

Json LinearConstraint2::to_json() const {
  return Json{{"a", a.str()}, {"b", b.str()}, {"c", c.str()}, {"rel", strict() ? "<" : "<="}};
}

LinearConstraint2 LinearConstraint2::from_json(const Json& j) {
  const auto rel = j.at("rel").get<std::string>();
  if (rel != "<" && rel != "<=") throw std::invalid_argument("linear constraint: rel must be < or <=");
  return {Rational::parse(j.at("a").get<std::string>()), Rational::parse(j.at("b").get<std::string>()),
          Rational::parse(j.at("c").get<std::string>()), rel == "<" ? Relation::Less : Relation::LessEqual};
}

std::vector<Point2> clip_halfplane(const std::vector<Point2>& poly, const LinearConstraint2& h) {
  std::vector<Point2> out;
  const std::size_t n = poly.size();
  if (n == 0) return out;
  if (n == 1) {
    if (h.slack(poly[0]).sign() >= 0) out.push_back(poly[0]);
    return out;
  }
  auto push = [&out](const Point2& p) {
    if (out.empty() || out.back() != p) out.push_back(p);
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % n];
    const Rational sp = h.slack(p);
    const Rational sq = h.slack(q);
    if (sp.sign() >= 0) push(p);
    if ((sp.sign() > 0 && sq.sign() < 0) || (sp.sign() < 0 && sq.sign() > 0)) {
      const Rational t = sp / (sp - sq);
      push(p + t * (q - p));
    }
  }
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

RegionResult region_empty(const std::vector<LinearConstraint2>& constraints, const BoundingBox& box) {
  if (constraints.empty()) throw std::invalid_argument("vacuous query");
  RegionResult result;
  Certificate& cert = result.certificate;
  cert.kind = "region_empty";
  Json cs = Json::array();
  for (const auto& c : constraints) cs.push_back(c.to_json());
  cert.inputs = Json{{"constraints", cs}, {"bounding_box", Json{{"x", box.x.to_json()}, {"y", box.y.to_json()}}}};
  cert.verdict = true;

  std::vector<Point2> poly{{box.x.lo, box.y.lo}, {box.x.hi, box.y.lo}, {box.x.hi, box.y.hi}, {box.x.lo, box.y.hi}};
  poly.erase(std::unique(poly.begin(), poly.end()), poly.end());
  while (poly.size() > 1 && poly.front() == poly.back()) poly.pop_back();

  for (std::size_t i = 0; i < constraints.size(); ++i) {
    poly = clip_halfplane(poly, constraints[i]);
    Json verts = Json::array();
    for (const auto& v : poly) verts.push_back(v.to_json());
    cert.steps.push_back(Json{{"clip", i}, {"vertices", verts}});
    if (poly.empty()) break;
  }

  if (poly.empty()) {
    cert.steps.push_back(Json{{"check", "empty_after_clip"}});
    return result;
  }

  bool strict_blocks = false;
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (!constraints[i].strict()) continue;
    Rational best = constraints[i].slack(poly.front());
    for (const auto& v : poly) best = max(best, constraints[i].slack(v));
    cert.steps.push_back(Json{{"check", "max_strict_slack"}, {"constraint", i}, {"value", best.str()}});
    if (best.sign() <= 0) strict_blocks = true;
  }
  if (strict_blocks) return result;

  // Every strict slack is positive somewhere on the clipped polygon and
  // non-negative everywhere on it, so the vertex average is strictly feasible.
  Point2 w{0, 0};
  for (const auto& v : poly) w = w + v;
  w = (Rational(1) / Rational(static_cast<long>(poly.size()))) * w;
  result.witness = w;
  cert.steps.push_back(Json{{"check", "witness"}, {"point", w.to_json()}});
  cert.fail("region nonempty; witness " + w.str());
  return result;
}

}  // namespace cenbm
