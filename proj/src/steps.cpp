#include "cenbm/steps.hpp"

#include <algorithm>
#include <stdexcept>

#include "cenbm/certifier.hpp"
#include "cenbm/extensions.hpp"
#include "cenbm/geometry.hpp"

namespace cenbm {

namespace {

Rational rat(const Json& j) { return Rational::parse(j.get<std::string>()); }

using PolyPoint = std::pair<Polynomial, Polynomial>;

std::vector<PolyPoint> poly_vertices(const Json& j) {
  std::vector<PolyPoint> out;
  for (const auto& v : j) out.emplace_back(Polynomial::from_json(v.at(0)), Polynomial::from_json(v.at(1)));
  if (out.size() != 3) throw std::invalid_argument("parametric triangle needs 3 vertices");
  return out;
}

Polynomial poly_orient(const PolyPoint& a, const PolyPoint& b, const PolyPoint& c) {
  return (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
}

// Sign implied for N/D by the certified signs of N and D, as a requirement
// string; empty if nothing useful follows.
std::string quotient_sign(const std::string& num, const std::string& den) {
  const bool den_pos = den == ">0";
  const bool den_neg = den == "<0";
  if (!den_pos && !den_neg) return "";
  if (num == ">=0") return den_pos ? ">=0" : "<=0";
  if (num == "<=0") return den_pos ? "<=0" : ">=0";
  if (num == ">0") return den_pos ? ">0" : "<0";
  if (num == "<0") return den_pos ? "<0" : ">0";
  return "";
}

bool intervals_cover(std::vector<Interval> pieces, const Interval& target) {
  std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return !a.lo_open && b.lo_open;
  });
  // Everything in the target below `reach` is covered; `reach` itself is
  // covered unless `gap` is set.
  Rational reach = target.lo;
  bool gap = !target.lo_open;
  for (const auto& p : pieces) {
    const bool connects = p.lo < reach || (p.lo == reach && (!gap || !p.lo_open));
    if (!connects) break;
    if (reach < p.hi || (reach == p.hi && gap && !p.hi_open)) {
      reach = p.hi;
      gap = p.hi_open;
    }
  }
  return target.hi < reach || (target.hi == reach && (!gap || target.hi_open));
}

}  // namespace

StepEvaluation evaluate_step(const std::string& check, const Json& args) {
  StepEvaluation ev;
  if (check == "contains") {
    const auto outer = ConvexPolygon::from_json(args.at("outer"));
    const auto inner = ConvexPolygon::from_json(args.at("inner"));
    const auto mode = args.at("mode").get<std::string>() == "open" ? Containment::Open : Containment::Closed;
    ev.value = contains_polygon(outer, inner, mode);
  } else if (check == "centroid") {
    ev.value = polygon_centroid(ConvexPolygon::from_json(args.at("polygon"))).to_json();
  } else if (check == "edge_supports" || check == "gauge") {
    const auto body = ConvexPolygon::from_json(args.at("body"));
    const auto against = ConvexPolygon::from_json(args.at("against"));
    const auto center = Point2::from_json(args.at("center"));
    if (check == "gauge") {
      ev.value = gauge_factor(body, against, center).str();
    } else {
      ev.value = Json::array();
      for (const auto& s : edge_supports(body, against, center)) ev.value.push_back(s.str());
    }
  } else if (check == "threshold_meet") {
    const auto f = LinearThreshold::from_json(args.at("first"));
    const auto g = LinearThreshold::from_json(args.at("second"));
    // beta - slope*alpha = intercept for each
    const auto p = line_intersection(Line2(-f.slope, 1, f.intercept), Line2(-g.slope, 1, g.intercept));
    ev.value = p ? p->to_json() : Json("parallel");
  } else if (check == "region_empty") {
    std::vector<LinearConstraint2> cs;
    for (const auto& c : args.at("constraints")) cs.push_back(LinearConstraint2::from_json(c));
    BoundingBox box;
    box.x = Interval::from_json(args.at("bounding_box").at("x"));
    box.y = Interval::from_json(args.at("bounding_box").at("y"));
    auto r = region_empty(cs, box);
    ev.value = r.empty() ? "empty" : "nonempty";
    ev.certificates.push_back(std::move(r.certificate));
  } else if (check == "grid_sweep") {
    Case1Thresholds t;
    if (args.contains("case1_thresholds")) {
      t.ac = LinearThreshold::from_json(args.at("case1_thresholds").at("ac"));
      t.bc = LinearThreshold::from_json(args.at("case1_thresholds").at("bc"));
    }
    ev.value = grid_sweep(args.at("kind").get<std::string>(), rat(args.at("step")), t);
  } else if (check == "quotient_sign") {
    // upper - lower as a single fraction N/D.
    const auto [un, ud] = threshold_fraction(args.at("upper").get<std::string>());
    const auto [ln, ld] = threshold_fraction(args.at("lower").get<std::string>());
    const Polynomial num = un * ld - ln * ud;
    const Polynomial den = ud * ld;
    const Interval iv = Interval::from_json(args.at("interval"));
    const auto ns = args.at("numerator_sign").get<std::string>();
    const auto ds = args.at("denominator_sign").get<std::string>();
    ev.certificates.push_back(certify_sign_on_interval(num, iv, sign_requirement_from_string(ns)));
    ev.certificates.push_back(certify_sign_on_interval(den, iv, sign_requirement_from_string(ds)));
    ev.value = Json{{"numerator", num.to_json()}, {"denominator", den.to_json()}, {"implies", quotient_sign(ns, ds)}};
  } else if (check == "threshold_values") {
    const auto t = case2_thresholds(rat(args.at("alpha")));
    ev.value = Json::array({t.g_ab.str(), t.g_bc.str(), t.g_ac.str()});
  } else if (check == "interval_cover") {
    std::vector<Interval> pieces;
    for (const auto& p : args.at("pieces")) pieces.push_back(Interval::from_json(p));
    ev.value = intervals_cover(pieces, Interval::from_json(args.at("target")));
  } else if (check == "parametric_centroid") {
    const auto v = poly_vertices(args.at("vertices"));
    ev.value = Json::array({(v[0].first + v[1].first + v[2].first).to_json(),
                            (v[0].second + v[1].second + v[2].second).to_json()});
  } else if (check == "parametric_orientation") {
    const auto v = poly_vertices(args.at("vertices"));
    const Polynomial o = poly_orient(v[0], v[1], v[2]);
    ev.certificates.push_back(
        certify_sign_on_interval(o, Interval::from_json(args.at("interval")), SignRequirement::Positive));
    ev.value = o.to_json();
  } else if (check == "edge_piece") {
    // Edge i of a counterclockwise parametric triangle, written n(t).x <= h(t).
    // If h > 0 and n(t).v - ratio*h(t) >= 0 on the interval, the gauge of any
    // body containing v is at least `ratio` there.
    const auto v = poly_vertices(args.at("vertices"));
    const auto i = args.at("edge").get<std::size_t>();
    const auto& p = v.at(i);
    const auto& q = v.at((i + 1) % 3);
    const Polynomial nx = q.second - p.second;
    const Polynomial ny = p.first - q.first;
    const Polynomial h = nx * p.first + ny * p.second;
    const Point2 w = Point2::from_json(args.at("body_vertex"));
    const Rational ratio = rat(args.at("ratio"));
    const Polynomial margin = w.x * nx + w.y * ny - ratio * h;
    const Interval iv = Interval::from_json(args.at("interval"));
    ev.certificates.push_back(certify_sign_on_interval(h, iv, SignRequirement::Positive));
    ev.certificates.push_back(certify_sign_on_interval(margin, iv, SignRequirement::NonNegative));
    ev.value = Json{{"offset", h.to_json()}, {"margin", margin.to_json()}};
  } else if (check == "centroid3") {
    ev.value = Simplex3::from_json(args.at("simplex")).centroid().to_json();
  } else if (check == "contains3" || check == "gauge3") {
    const auto box = Box3::from_json(args.at("box"));
    const auto s = Simplex3::from_json(args.at("simplex"));
    if (check == "gauge3") {
      ev.value = gauge3(box, s).str();
    } else {
      ev.value = std::all_of(s.v.begin(), s.v.end(), [&](const Point3& p) { return box.contains(p); });
    }
  } else {
    throw std::invalid_argument("unknown step check '" + check + "'");
  }
  return ev;
}

bool expectation_holds(const Json& expect, const Json& value, const std::vector<Certificate>& nested) {
  if (expect.contains("all")) {
    return std::all_of(expect.at("all").begin(), expect.at("all").end(),
                       [&](const Json& e) { return expectation_holds(e, value, nested); });
  }
  const Json& v = expect.contains("field") ? value.at(expect.at("field").get<std::string>()) : value;
  if (expect.contains("certificates")) {
    return std::all_of(nested.begin(), nested.end(), [](const Certificate& c) { return c.ok(); });
  }
  if (expect.contains("eq")) return v == expect.at("eq");
  if (expect.contains("all_eq")) {
    const Rational target = rat(expect.at("all_eq"));
    return v.is_array() && std::all_of(v.begin(), v.end(), [&](const Json& x) { return rat(x) == target; });
  }
  const auto cmp_op = [&](const char* key, auto pred) -> std::optional<bool> {
    if (!expect.contains(key)) return std::nullopt;
    return pred(rat(v), rat(expect.at(key)));
  };
  if (auto r = cmp_op("ge", [](const Rational& a, const Rational& b) { return a >= b; })) return *r;
  if (auto r = cmp_op("gt", [](const Rational& a, const Rational& b) { return a > b; })) return *r;
  if (auto r = cmp_op("le", [](const Rational& a, const Rational& b) { return a <= b; })) return *r;
  if (auto r = cmp_op("lt", [](const Rational& a, const Rational& b) { return a < b; })) return *r;
  throw std::invalid_argument("unknown expectation " + expect.dump());
}

void add_step(Certificate& cert, const std::string& check, Json args, Json expect) {
  StepEvaluation ev = evaluate_step(check, args);
  const bool holds = expectation_holds(expect, ev.value, ev.certificates);
  Json step{{"check", check}, {"args", std::move(args)}, {"expect", std::move(expect)}, {"value", ev.value}};
  if (!ev.certificates.empty()) {
    Json nested = Json::array();
    for (const auto& c : ev.certificates) nested.push_back(c.to_json());
    step["certificates"] = std::move(nested);
  }
  const std::size_t index = cert.steps.size();
  cert.steps.push_back(std::move(step));
  if (!holds) cert.fail("step " + std::to_string(index) + " (" + check + ") expectation not met");
}

}  // namespace cenbm
