#include "cenbm/certifier.hpp"

#include <stdexcept>

#include "cenbm/parallel.hpp"
#include "cenbm/steps.hpp"

namespace cenbm {

namespace {

const Point2 kOrigin{0, 0};

Point2 scaled(const Point2& p) { return kCriticalRatio * p; }

// Line meets the closed polygon iff its vertices are not all strictly on one
// side.
bool line_meets_polygon(const Line2& l, const ConvexPolygon& p) {
  bool pos = false, neg = false;
  for (const auto& v : p.vertices()) {
    const int s = l.side(v);
    if (s == 0) return true;
    (s > 0 ? pos : neg) = true;
  }
  return pos && neg;
}

// y = m (x - x0) + y0  <=>  m x - y = m x0 - y0
Line2 slope_line(const Rational& m, const Rational& x0, const Rational& y0) { return {m, -1, m * x0 - y0}; }

long grid_divisions(const Rational& step) {
  if (step.sign() <= 0 || step.num() != 1) throw std::invalid_argument("grid step must be 1/n");
  return step.den().get_si();
}

Json polygon_json(const Triangle& t) { return t.polygon().to_json(); }

struct SweepTally {
  long points = 0;
  long failures = 0;
  Json first_failure;

  void record(bool ok, Json where) {
    ++points;
    if (ok) return;
    if (failures++ == 0) first_failure = std::move(where);
  }

  void merge(const SweepTally& o) {
    if (failures == 0 && o.failures > 0) first_failure = o.first_failure;
    points += o.points;
    failures += o.failures;
  }

  [[nodiscard]] Json to_json() const {
    Json j{{"points", points}, {"failures", failures}};
    if (failures > 0) j["first_failure"] = first_failure;
    return j;
  }
};

Json case1_sweep(const std::string& kind, long n, const Case1Thresholds& t) {
  const auto square = ConvexPolygon::square();
  const Point2 bl{-1, -1}, br{1, -1}, tl{-1, 1};
  std::vector<SweepTally> rows(n);
  parallel_for(n, [&](std::size_t r) {
    const long k = static_cast<long>(r) + 1;
    SweepTally& tally = rows[r];
    const Rational alpha(k, n);
    for (long j = -k + 1; j <= n - k; ++j) {  // j = -k is the degenerate beta = -alpha
      const Rational beta(j, n);
      const Case1Params p(alpha, beta);
      const auto [lac, lbc] = case1_scaled_lines(p);
      const Json where = Json::array({alpha.str(), beta.str()});
      if (kind == "case1_coverage") {
        tally.record(line_meets_segment(lac, bl, br) || line_meets_segment(lbc, bl, tl), where);
      } else if (kind == "case1_soundness_ac") {
        // Below (2 - alpha)/3 the bottom crossing can fall left of x = -1
        // (when 9 alpha + 7 beta < 2); the line still cuts S there.
        if (beta <= t.ac.at(alpha)) tally.record(line_meets_polygon(lac, square), where);
      } else if (kind == "case1_soundness_bc") {
        if (beta <= t.bc.at(alpha)) tally.record(line_meets_segment(lbc, bl, tl), where);
      } else if (kind == "case1_printed_forms") {
        const Rational m_ac = Rational(2) * alpha + beta;
        const Rational m_bc = -alpha - Rational(2) * beta;
        const bool forms = lac == slope_line(m_ac, Q(5, 2), Q(5, 2) * alpha) &&
                           lbc == Line2(m_bc, -1, Q(5, 2) * (alpha + beta));
        const auto e = line_intersection(lac, Line2(0, 1, -1));
        const auto f = line_intersection(lbc, Line2(1, 0, -1));
        const bool crossings = e && f && *e == Point2{case1_bottom_crossing(p), -1} &&
                               *f == Point2{-1, case1_left_crossing(p)};
        tally.record(forms && crossings, where);
      } else if (kind == "case1_gauge_floor") {
        tally.record(gauge_factor(square, case1_triangle(p).polygon(), kOrigin) >= kCriticalRatio, where);
      } else {
        throw std::invalid_argument("unknown sweep kind '" + kind + "'");
      }
    }
  });
  SweepTally total;
  for (const auto& row : rows) total.merge(row);
  return total.to_json();
}

Json case2_sweep(const std::string& kind, long n) {
  const auto square = ConvexPolygon::square();
  const Rational fifth = Q(1, 5), half = Q(1, 2);
  std::vector<SweepTally> rows(n);
  parallel_for(n, [&](std::size_t r) {
    const long k = static_cast<long>(r) + 1;
    SweepTally& tally = rows[r];
    const Rational alpha(k, n);
    for (long j = 0; j <= n; ++j) {
      const Rational gamma(-j, n);
      if (alpha == Rational(1) && gamma == Rational(-1)) continue;  // collinear
      const Case2Params p(alpha, gamma);
      const auto lines = case2_scaled_lines(p);
      const auto& [lab, lbc, lac] = lines;
      const Json where = Json::array({alpha.str(), gamma.str()});
      if (kind == "case2_coverage") {
        tally.record(line_meets_polygon(lab, square) || line_meets_polygon(lbc, square) ||
                         line_meets_polygon(lac, square),
                     where);
      } else if (kind == "case2_soundness_ab") {
        if (alpha <= fifth && gamma >= threshold_ab(alpha)) tally.record(line_meets_polygon(lab, square), where);
      } else if (kind == "case2_soundness_bc") {
        if (fifth <= alpha && alpha <= half && gamma >= threshold_bc(alpha))
          tally.record(line_meets_polygon(lbc, square), where);
      } else if (kind == "case2_soundness_ac") {
        if (gamma <= threshold_ac(alpha)) tally.record(line_meets_polygon(lac, square), where);
      } else if (kind == "case2_printed_forms") {
        const Rational five_half = Q(5, 2);
        const Rational m_ab = (Rational(-1) + Rational(2) * alpha) / (Rational(2) + gamma);
        const Rational m_ac = (alpha + Rational(1)) / (Rational(1) - gamma);
        bool ok = lab == slope_line(m_ab, five_half, five_half * alpha) &&
                  lac == slope_line(m_ac, five_half, five_half * alpha);
        const Rational bc_den = Rational(-1) - Rational(2) * gamma;
        if (!bc_den.is_zero()) {
          const Rational m_bc = (Rational(2) - alpha) / bc_den;
          ok = ok && lbc == slope_line(m_bc, five_half * gamma, Rational(-5, 2));
        }
        // Crossings k (x = 1), l and m (y = -1).
        const auto k_pt = line_intersection(lab, Line2(1, 0, 1));
        const auto l_pt = line_intersection(lbc, Line2(0, 1, -1));
        const auto m_pt = line_intersection(lac, Line2(0, 1, -1));
        const Rational k_y = Q(-3, 2) * m_ab + five_half * alpha;
        const Rational l_x = (Rational(-3) - Rational(6) * gamma) / (Rational(4) - Rational(2) * alpha) +
                             five_half * gamma;
        const Rational m_x = five_half + (Rational(-2) - Rational(5) * alpha) / (Rational(2) + Rational(2) * alpha) *
                                             (Rational(1) - gamma);
        ok = ok && k_pt && l_pt && m_pt && k_pt->y == k_y && l_pt->x == l_x && m_pt->x == m_x;
        tally.record(ok, where);
      } else if (kind == "case2_gauge_floor") {
        tally.record(gauge_factor(square, case2_triangle(p).polygon(), kOrigin) >= kCriticalRatio, where);
      } else {
        throw std::invalid_argument("unknown sweep kind '" + kind + "'");
      }
    }
  });
  SweepTally total;
  for (const auto& row : rows) total.merge(row);
  return total.to_json();
}

Json sweep_step_args(const std::string& kind, const Rational& step, const Case1Thresholds* t) {
  Json args{{"kind", kind}, {"step", step.str()}};
  if (t) args["case1_thresholds"] = Json{{"ac", t->ac.to_json()}, {"bc", t->bc.to_json()}};
  return args;
}

const Json kNoFailures{{"field", "failures"}, {"eq", 0}};
const Json kCertificatesPass{{"certificates", "pass"}};

Json poly_point(const Polynomial& x, const Polynomial& y) { return Json::array({x.to_json(), y.to_json()}); }

}  // namespace

Case1Params::Case1Params(Rational a, Rational b) : alpha(std::move(a)), beta(std::move(b)) {
  if (alpha.sign() <= 0 || alpha > Rational(1)) throw std::invalid_argument("case 1: alpha must lie in (0, 1]");
  if (beta < -alpha || beta > Rational(1) - alpha)
    throw std::invalid_argument("case 1: beta must lie in [-alpha, 1 - alpha]");
}

Case2Params::Case2Params(Rational a, Rational g) : alpha(std::move(a)), gamma(std::move(g)) {
  if (alpha.sign() <= 0 || alpha > Rational(1)) throw std::invalid_argument("case 2: alpha must lie in (0, 1]");
  if (gamma < Rational(-1) || gamma.sign() > 0) throw std::invalid_argument("case 2: gamma must lie in [-1, 0]");
}

Triangle case1_triangle(const Case1Params& p) { return {{1, p.alpha}, {-1, p.beta}, {0, -p.alpha - p.beta}}; }

std::pair<Line2, Line2> case1_scaled_lines(const Case1Params& p) {
  const Point2 a = scaled({1, p.alpha});
  const Point2 b = scaled({-1, p.beta});
  const Point2 c = scaled({0, -p.alpha - p.beta});
  return {Line2::through(a, c), Line2::through(b, c)};
}

Rational case1_bottom_crossing(const Case1Params& p) {
  return (Rational(5) * p.alpha + Rational(5) * p.beta - Rational(2)) / (Rational(4) * p.alpha + Rational(2) * p.beta);
}

Rational case1_left_crossing(const Case1Params& p) { return Q(-3, 2) * p.alpha - Q(1, 2) * p.beta; }

Triangle case2_triangle(const Case2Params& p) {
  return {{1, p.alpha}, {Rational(-1) - p.gamma, Rational(1) - p.alpha}, {p.gamma, -1}};
}

std::array<Line2, 3> case2_scaled_lines(const Case2Params& p) {
  const Point2 a = scaled({1, p.alpha});
  const Point2 b = scaled({Rational(-1) - p.gamma, Rational(1) - p.alpha});
  const Point2 c = scaled({p.gamma, -1});
  return {Line2::through(a, b), Line2::through(b, c), Line2::through(a, c)};
}

std::pair<Polynomial, Polynomial> threshold_fraction(const std::string& name) {
  if (name == "ab") return {Polynomial({1, -4}), Polynomial({-2, 5})};
  if (name == "bc") return {Polynomial({1, -2}), Polynomial({-4, 5})};
  if (name == "ac") return {Polynomial({-1, 2}), Polynomial({2, 5})};
  if (name == "zero") return {Polynomial{}, Polynomial::constant(1)};
  throw std::invalid_argument("unknown covering curve '" + name + "'");
}

namespace {

Rational eval_threshold(const std::string& name, const Rational& alpha) {
  const auto [num, den] = threshold_fraction(name);
  const Rational d = den(alpha);
  if (d.is_zero()) throw std::domain_error("threshold undefined");
  return num(alpha) / d;
}

}  // namespace

Rational threshold_ab(const Rational& alpha) { return eval_threshold("ab", alpha); }
Rational threshold_bc(const Rational& alpha) { return eval_threshold("bc", alpha); }
Rational threshold_ac(const Rational& alpha) { return eval_threshold("ac", alpha); }

Case2Thresholds case2_thresholds(const Rational& alpha) {
  return {threshold_ab(alpha), threshold_bc(alpha), threshold_ac(alpha)};
}

LinearThreshold LinearThreshold::from_json(const Json& j) {
  return {Rational::parse(j.at("intercept").get<std::string>()), Rational::parse(j.at("slope").get<std::string>())};
}

Json grid_sweep(const std::string& kind, const Rational& step, const Case1Thresholds& case1) {
  const long n = grid_divisions(step);
  if (kind.rfind("case1_", 0) == 0) return case1_sweep(kind, n, case1);
  if (kind.rfind("case2_", 0) == 0) return case2_sweep(kind, n);
  throw std::invalid_argument("unknown sweep kind '" + kind + "'");
}

std::vector<LinearConstraint2> case1_uncovered_region(const Case1Thresholds& t) {
  using C = LinearConstraint2;
  return {
      C::gt(1, 0, 0),                            // alpha > 0
      C::le(1, 0, 1),                            // alpha <= 1
      C::ge(1, 1, 0),                            // beta >= -alpha
      C::le(1, 1, 1),                            // beta <= 1 - alpha
      C::gt(-t.ac.slope, 1, t.ac.intercept),     // beta above the l_{a'c'} threshold
      C::gt(-t.bc.slope, 1, t.bc.intercept),     // beta above the l_{b'c'} threshold
  };
}

std::vector<Triangle> extremal_triangles() {
  return {Triangle({1, Q(1, 2)}, {-1, Q(1, 2)}, {0, -1}), Triangle({1, Q(1, 5)}, {Q(-4, 5), Q(4, 5)}, {Q(-1, 5), -1})};
}

namespace {

Certificate witness_certificate(const std::vector<Triangle>& triangles, bool second_tight) {
  const auto square = ConvexPolygon::square();
  Certificate cert;
  cert.kind = "witness";
  Json tris = Json::array();
  for (const auto& t : triangles) tris.push_back(polygon_json(t));
  cert.inputs = Json{{"square", square.to_json()}, {"triangles", tris}, {"ratio", kCriticalRatio.str()}};
  cert.verdict = true;
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const Json tj = polygon_json(triangles[i]);
    add_step(cert, "contains", Json{{"outer", square.to_json()}, {"inner", tj}, {"mode", "closed"}}, Json{{"eq", true}});
    add_step(cert, "centroid", Json{{"polygon", tj}}, Json{{"eq", kOrigin.to_json()}});
    const Json gauge_args{{"body", square.to_json()}, {"against", tj}, {"center", kOrigin.to_json()}};
    add_step(cert, "gauge", gauge_args, Json{{"eq", kCriticalRatio.str()}});
    if (second_tight && i == 1) add_step(cert, "edge_supports", gauge_args, Json{{"all_eq", kCriticalRatio.str()}});
  }
  return cert;
}

}  // namespace

Certificate witness_check(const std::vector<Triangle>& triangles) {
  const auto ext = extremal_triangles();
  const bool canonical = triangles.size() == ext.size() && triangles[0] == ext[0] && triangles[1] == ext[1];
  return witness_certificate(triangles, canonical);
}

Certificate case1_cover(const CoverConfig& cfg) {
  Certificate cert;
  cert.kind = "case1_cover";
  const auto& t = cfg.case1;
  cert.inputs = Json{{"region", "0 < alpha <= 1, -alpha <= beta <= 1 - alpha"},
                     {"thresholds", Json{{"ac", t.ac.to_json()}, {"bc", t.bc.to_json()}}},
                     {"grid_step", cfg.grid_step.str()}};
  cert.verdict = true;

  Json cs = Json::array();
  for (const auto& c : case1_uncovered_region(t)) cs.push_back(c.to_json());
  const BoundingBox box;
  add_step(cert, "region_empty",
           Json{{"constraints", cs}, {"bounding_box", Json{{"x", box.x.to_json()}, {"y", box.y.to_json()}}}},
           Json{{"all", Json::array({Json{{"eq", "empty"}}, kCertificatesPass})}});
  add_step(cert, "threshold_meet", Json{{"first", t.ac.to_json()}, {"second", t.bc.to_json()}},
           Json{{"eq", Point2{Q(1, 2), Q(1, 2)}.to_json()}});
  for (const char* kind : {"case1_soundness_ac", "case1_soundness_bc", "case1_coverage", "case1_printed_forms",
                           "case1_gauge_floor"})
    add_step(cert, "grid_sweep", sweep_step_args(kind, cfg.grid_step, &t), kNoFailures);
  return cert;
}

Certificate case2_cover(const CoverConfig& cfg) {
  Certificate cert;
  cert.kind = "case2_cover";
  Json curves = Json::object();
  for (const char* name : {"ab", "bc", "ac"}) {
    const auto [num, den] = threshold_fraction(name);
    curves[name] = Json{{"numerator", num.to_json()}, {"denominator", den.to_json()}};
  }
  cert.inputs = Json{{"region", "0 < alpha <= 1, -1 <= gamma <= 0"}, {"curves", curves},
                     {"grid_step", cfg.grid_step.str()}};
  cert.verdict = true;

  const Rational fifth = Q(1, 5), half = Q(1, 2);
  const Interval left = Interval::left_open(0, fifth);
  const Interval middle = Interval::closed(fifth, half);
  const Interval right = Interval::closed(half, 1);
  auto dominance = [&](const char* lower, const Interval& iv, const Polynomial& expected_numerator,
                       const char* den_sign) {
    add_step(cert, "quotient_sign",
             Json{{"upper", "ac"}, {"lower", lower}, {"interval", iv.to_json()},
                  {"numerator_sign", std::string(den_sign) == "<0" ? "<=0" : ">=0"},
                  {"denominator_sign", den_sign}},
             Json{{"all", Json::array({kCertificatesPass, Json{{"field", "implies"}, {"eq", ">=0"}},
                                       Json{{"field", "numerator"}, {"eq", expected_numerator.to_json()}}})}});
  };
  // g_ac - g_ab = 6a(5a - 1) / ((5a + 2)(5a - 2))
  dominance("ab", left, Rational(6) * Polynomial::x() * Polynomial({-1, 5}), "<0");
  // g_ac - g_bc = 2(5a - 1)(2a - 1) / ((5a + 2)(5a - 4))
  dominance("bc", middle, Rational(2) * Polynomial({-1, 5}) * Polynomial({-1, 2}), "<0");
  // g_ac = (2a - 1)/(5a + 2) >= 0, so gamma <= 0 <= g_ac
  dominance("zero", right, Polynomial({-1, 2}), ">0");

  add_step(cert, "interval_cover",
           Json{{"pieces", Json::array({left.to_json(), middle.to_json(), right.to_json()})},
                {"target", Interval::left_open(0, 1).to_json()}},
           Json{{"eq", true}});
  add_step(cert, "threshold_values", Json{{"alpha", fifth.str()}}, Json{{"all_eq", Q(-1, 5).str()}});
  for (const char* kind : {"case2_soundness_ab", "case2_soundness_bc", "case2_soundness_ac", "case2_coverage",
                           "case2_printed_forms", "case2_gauge_floor"})
    add_step(cert, "grid_sweep", sweep_step_args(kind, cfg.grid_step, nullptr), kNoFailures);
  return cert;
}

Triangle alpha_zero_triangle(const Rational& t) { return {{1, 0}, {t, 1}, {Rational(-1) - t, -1}}; }

Certificate subcase_alpha_zero(int case_id) {
  if (case_id != 1 && case_id != 2) throw std::invalid_argument("subcase: case id must be 1 or 2");
  const Polynomial one = Polynomial::constant(1), zero{}, t = Polynomial::x();
  const Polynomial minus_one = Polynomial::constant(-1), minus_one_minus_t({-1, -1});
  // Case 1 moves b = (t, 1) along the top side; case 2 moves c = (s, -1)
  // along the bottom side. Both keep the midpoint of bc at (-1/2, 0).
  const Json vertices =
      case_id == 1 ? Json::array({poly_point(one, zero), poly_point(t, one), poly_point(minus_one_minus_t, minus_one)})
                   : Json::array({poly_point(one, zero), poly_point(minus_one_minus_t, one), poly_point(t, minus_one)});
  const Interval domain = Interval::closed(-1, 0);
  const Rational split = Q(-1, 2);

  Certificate cert;
  cert.kind = "subcase_alpha_zero";
  cert.inputs = Json{{"case", case_id}, {"vertices", vertices}, {"parameter_interval", domain.to_json()},
                     {"ratio", kCriticalRatio.str()}};
  cert.verdict = true;

  add_step(cert, "parametric_centroid", Json{{"vertices", vertices}},
           Json{{"eq", Json::array({Json::array(), Json::array()})}});
  add_step(cert, "parametric_orientation", Json{{"vertices", vertices}, {"interval", domain.to_json()}},
           kCertificatesPass);

  const auto square = ConvexPolygon::square();
  const std::vector<Interval> pieces{Interval::closed(-1, split), Interval::closed(split, 0)};
  Json piece_json = Json::array();
  for (const auto& piece : pieces) {
    piece_json.push_back(piece.to_json());
    // First (edge, square vertex) pair whose support bound certifies the piece.
    Json chosen;
    for (std::size_t e = 0; e < 3 && chosen.is_null(); ++e) {
      for (const auto& v : square.vertices()) {
        Json args{{"vertices", vertices}, {"edge", e}, {"body_vertex", v.to_json()},
                  {"ratio", kCriticalRatio.str()}, {"interval", piece.to_json()}};
        const auto ev = evaluate_step("edge_piece", args);
        if (expectation_holds(kCertificatesPass, ev.value, ev.certificates)) {
          chosen = std::move(args);
          break;
        }
      }
    }
    if (chosen.is_null())
      chosen = Json{{"vertices", vertices}, {"edge", 0}, {"body_vertex", square[0].to_json()},
                    {"ratio", kCriticalRatio.str()}, {"interval", piece.to_json()}};
    add_step(cert, "edge_piece", std::move(chosen), kCertificatesPass);
  }
  add_step(cert, "interval_cover", Json{{"pieces", piece_json}, {"target", domain.to_json()}}, Json{{"eq", true}});

  const Triangle at_split = alpha_zero_triangle(split);
  add_step(cert, "gauge",
           Json{{"body", square.to_json()}, {"against", polygon_json(at_split)}, {"center", kOrigin.to_json()}},
           Json{{"eq", kCriticalRatio.str()}});
  return cert;
}

Json ProofLedger::to_json() const {
  Json es = Json::array();
  for (const auto& e : entries)
    es.push_back(Json{{"name", e.name}, {"certificate", e.certificate.to_json()},
                      {"verdict", e.certificate.ok() ? "pass" : "fail"}});
  return Json{{"theorem", kTheoremStatement}, {"entries", es}, {"verdict", verdict ? "pass" : "fail"}};
}

std::string ProofLedger::first_failure() const {
  for (const auto& e : entries)
    if (!e.certificate.ok()) return e.name;
  return "";
}

ProofLedger certify_theorem(const CoverConfig& cfg) {
  static const char* const kNames[] = {"witness", "case1_cover", "case2_cover", "subcase_1_2", "subcase_2_2"};
  std::vector<Certificate> slots(5);
  parallel_for(5, [&](std::size_t i) {
    switch (i) {
      case 0: slots[i] = witness_check(); break;
      case 1: slots[i] = case1_cover(cfg); break;
      case 2: slots[i] = case2_cover(cfg); break;
      case 3: slots[i] = subcase_alpha_zero(1); break;
      default: slots[i] = subcase_alpha_zero(2); break;
    }
  });
  ProofLedger ledger;
  ledger.verdict = true;
  for (std::size_t i = 0; i < 5; ++i) {
    ledger.verdict = ledger.verdict && slots[i].ok();
    ledger.entries.push_back({kNames[i], std::move(slots[i])});
  }
  return ledger;
}

}  // namespace cenbm
