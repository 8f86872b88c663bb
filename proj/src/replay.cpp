#include "cenbm/replay.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "cenbm/certifier.hpp"
#include "cenbm/parallel.hpp"
#include "cenbm/steps.hpp"

namespace cenbm {

ReplayError::ReplayError(std::string location, const std::string& message)
    : std::runtime_error(location.empty() ? message : location + ": " + message), location_(std::move(location)) {}

Json ReplayReport::to_json() const {
  Json issues_json = Json::array();
  for (const auto& i : issues) issues_json.push_back(Json{{"location", i.location}, {"message", i.message}});
  Json j{{"document", document}, {"verdict", verdict ? "pass" : "fail"}, {"steps_replayed", steps_replayed}};
  if (!issues.empty()) j["first_failure"] = issues.front().location;
  j["issues"] = std::move(issues_json);
  return j;
}

namespace {

std::string clip(const Json& j) {
  std::string s = j.dump();
  if (s.size() > 120) s = s.substr(0, 117) + "...";
  return s;
}

std::string field(const std::string& loc, const std::string& name) { return loc.empty() ? name : loc + "." + name; }
std::string index(const std::string& loc, const std::string& name, std::size_t i) {
  return field(loc, name) + "[" + std::to_string(i) + "]";
}

const Json& require(const Json& obj, const char* key, const std::string& loc) {
  if (!obj.is_object()) throw ReplayError(loc, "expected an object");
  if (!obj.contains(key)) throw ReplayError(loc, std::string("missing field '") + key + "'");
  return obj.at(key);
}

bool is_primitive(const std::string& kind) { return kind == "sign_on_interval" || kind == "region_empty"; }

Certificate regenerate_primitive(const std::string& kind, const Json& inputs) {
  if (kind == "sign_on_interval") {
    return certify_sign_on_interval(Polynomial::from_json(inputs.at("polynomial")),
                                    Interval::from_json(inputs.at("interval")),
                                    sign_requirement_from_string(inputs.at("required").get<std::string>()));
  }
  std::vector<LinearConstraint2> cs;
  for (const auto& c : inputs.at("constraints")) cs.push_back(LinearConstraint2::from_json(c));
  BoundingBox box;
  box.x = Interval::from_json(inputs.at("bounding_box").at("x"));
  box.y = Interval::from_json(inputs.at("bounding_box").at("y"));
  return region_empty(cs, box).certificate;
}

// Stored vs recomputed primitive certificate, step by step.
bool compare_certificate(const Json& stored, const Certificate& fresh, const std::string& loc, ReplayReport& rep) {
  const Json f = fresh.to_json();
  bool ok = true;
  auto issue = [&](std::string where, std::string what) {
    rep.issues.push_back({std::move(where), std::move(what)});
    ok = false;
  };
  if (!stored.is_object()) {
    issue(loc, "expected a certificate object");
    return false;
  }
  for (const char* key : {"kind", "inputs"}) {
    if (!stored.contains(key) || stored.at(key) != f.at(key)) issue(field(loc, key), "does not match the recomputation");
  }
  const Json& steps = stored.contains("steps") ? stored.at("steps") : Json::array();
  const Json& fsteps = f.at("steps");
  const std::size_t n = std::min(steps.size(), fsteps.size());
  for (std::size_t i = 0; i < n; ++i) {
    ++rep.steps_replayed;
    if (steps.at(i) != fsteps.at(i)) {
      issue(index(loc, "steps", i), "stored " + clip(steps.at(i)) + ", recomputed " + clip(fsteps.at(i)));
    }
  }
  if (steps.size() != fsteps.size()) {
    issue(field(loc, "steps"),
          "stored " + std::to_string(steps.size()) + " steps, recomputed " + std::to_string(fsteps.size()));
  }
  if (!stored.contains("verdict") || stored.at("verdict") != f.at("verdict")) {
    issue(field(loc, "verdict"), "recomputed verdict is " + f.at("verdict").get<std::string>());
  }
  return ok;
}

// Returns whether the step holds under recomputation; mismatches go to rep.
bool replay_step(const Json& step, const std::string& loc, ReplayReport& rep) {
  ++rep.steps_replayed;
  auto fail = [&](std::string where, std::string what) {
    rep.issues.push_back({std::move(where), std::move(what)});
    return false;
  };
  for (const char* key : {"check", "args", "expect", "value"}) {
    if (!step.is_object() || !step.contains(key)) return fail(loc, std::string("malformed step: missing '") + key + "'");
  }
  if (!step.at("check").is_string()) return fail(field(loc, "check"), "expected a string");
  const auto check = step.at("check").get<std::string>();

  StepEvaluation ev;
  try {
    ev = evaluate_step(check, step.at("args"));
  } catch (const std::exception& e) {
    return fail(field(loc, "args"), std::string("cannot recompute ") + check + ": " + e.what());
  }

  bool ok = true;
  if (step.at("value") != ev.value) {
    ok = fail(field(loc, "value"), "stored " + clip(step.at("value")) + ", recomputed " + clip(ev.value));
  }
  const Json& nested = step.contains("certificates") ? step.at("certificates") : Json::array();
  if (!nested.is_array() || nested.size() != ev.certificates.size()) {
    ok = fail(field(loc, "certificates"), "expected " + std::to_string(ev.certificates.size()) + " nested certificates");
  } else {
    for (std::size_t k = 0; k < nested.size(); ++k) {
      ok = compare_certificate(nested.at(k), ev.certificates[k], index(loc, "certificates", k), rep) && ok;
    }
  }
  try {
    if (!expectation_holds(step.at("expect"), ev.value, ev.certificates)) {
      ok = fail(loc, check + " expectation " + clip(step.at("expect")) + " not met by " + clip(ev.value));
    }
  } catch (const std::exception& e) {
    ok = fail(field(loc, "expect"), e.what());
  }
  return ok;
}

// Canonical statement of a step or certificate: everything but computed values.
Json statement_of(const Json& cert) {
  Json steps = Json::array();
  for (const auto& s : cert.at("steps")) {
    if (!s.is_object()) {
      steps.push_back(Json());
      continue;
    }
    steps.push_back(Json{{"check", s.value("check", Json())}, {"args", s.value("args", Json())},
                         {"expect", s.value("expect", Json())}});
  }
  return Json{{"kind", cert.at("kind")}, {"inputs", cert.at("inputs")}, {"steps", steps}};
}

// Per-entry statements of the theorem at a grid resolution, memoized.
std::vector<Json> canonical_statement(const CoverConfig& cfg) {
  static std::mutex mu;
  static std::map<std::string, std::vector<Json>> cache;
  const std::string key = cfg.grid_step.str();
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::vector<Json> out;
  const Json ledger = certify_theorem(cfg).to_json();
  for (const auto& e : ledger.at("entries")) out.push_back(statement_of(e.at("certificate")));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(out)).first->second;
}

void check_statement(const Json& entries, ReplayReport& rep) {
  // Grid resolution is the one free parameter; everything else is fixed.
  CoverConfig cfg;
  try {
    cfg.grid_step = Rational::parse(entries.at(1).at("certificate").at("inputs").at("grid_step").get<std::string>());
  } catch (const std::exception&) {
    rep.issues.push_back({"entries[1].certificate.inputs.grid_step", "missing or invalid grid step"});
    return;
  }
  std::vector<Json> canonical;
  try {
    canonical = canonical_statement(cfg);
  } catch (const std::exception& e) {
    rep.issues.push_back({"entries[1].certificate.inputs.grid_step", e.what()});
    return;
  }
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    const std::string loc = index("", "entries", i) + ".certificate";
    const Json& want = canonical[i];
    const Json have = statement_of(entries.at(i).at("certificate"));
    for (const char* key : {"kind", "inputs"}) {
      if (have.at(key) != want.at(key)) rep.issues.push_back({field(loc, key), "differs from the theorem statement"});
    }
    const auto& hs = have.at("steps");
    const auto& ws = want.at("steps");
    for (std::size_t j = 0; j < std::min(hs.size(), ws.size()); ++j) {
      if (hs.at(j) != ws.at(j)) {
        rep.issues.push_back({index(loc, "steps", j), "check/args/expect differ from the theorem statement"});
      }
    }
    if (hs.size() != ws.size()) {
      rep.issues.push_back({field(loc, "steps"), "theorem statement has " + std::to_string(ws.size()) + " steps"});
    }
  }
}

void validate_certificate_shape(const Json& cert, const std::string& loc) {
  if (!require(cert, "kind", loc).is_string()) throw ReplayError(field(loc, "kind"), "expected a string");
  require(cert, "inputs", loc);
  if (!require(cert, "steps", loc).is_array()) throw ReplayError(field(loc, "steps"), "expected an array");
  const Json& v = require(cert, "verdict", loc);
  if (v != "pass" && v != "fail") throw ReplayError(field(loc, "verdict"), "expected \"pass\" or \"fail\"");
}

ReplayReport replay_ledger(const Json& doc) {
  ReplayReport rep;
  rep.document = "ledger";
  if (require(doc, "theorem", "") != kTheoremStatement) {
    rep.issues.push_back({"theorem", std::string("expected \"") + kTheoremStatement + "\""});
  }
  const Json& entries = require(doc, "entries", "");
  if (!entries.is_array()) throw ReplayError("entries", "expected an array");
  static const char* const kNames[] = {"witness", "case1_cover", "case2_cover", "subcase_1_2", "subcase_2_2"};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string loc = index("", "entries", i);
    if (!require(entries.at(i), "name", loc).is_string()) throw ReplayError(field(loc, "name"), "expected a string");
    validate_certificate_shape(require(entries.at(i), "certificate", loc), field(loc, "certificate"));
  }
  const bool shape_ok = entries.size() == 5;
  if (!shape_ok) rep.issues.push_back({"entries", "expected 5 entries, found " + std::to_string(entries.size())});

  // Entries replay independently; merge in document order.
  std::vector<ReplayReport> parts(entries.size());
  std::vector<char> passed(entries.size(), 0);
  parallel_for(entries.size(), [&](std::size_t i) {
    const std::string loc = index("", "entries", i);
    const Json& e = entries.at(i);
    if (shape_ok && e.at("name") != kNames[i]) {
      parts[i].issues.push_back({field(loc, "name"), std::string("expected \"") + kNames[i] + "\""});
    }
    passed[i] = replay_certificate_json(e.at("certificate"), field(loc, "certificate"), parts[i]);
    const Json recomputed = passed[i] ? "pass" : "fail";
    if (e.value("verdict", Json()) != recomputed) {
      parts[i].issues.push_back({field(loc, "verdict"), "recomputed verdict is " + recomputed.get<std::string>()});
    }
  });
  bool all_pass = shape_ok;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    rep.steps_replayed += parts[i].steps_replayed;
    rep.issues.insert(rep.issues.end(), parts[i].issues.begin(), parts[i].issues.end());
    all_pass = all_pass && passed[i];
  }
  if (shape_ok) check_statement(entries, rep);
  if (doc.value("verdict", Json()) != (all_pass ? "pass" : "fail")) {
    rep.issues.push_back({"verdict", std::string("recomputed verdict is ") + (all_pass ? "pass" : "fail")});
  }
  rep.verdict = all_pass && rep.issues.empty();
  return rep;
}

}  // namespace

bool replay_certificate_json(const Json& cert, const std::string& loc, ReplayReport& rep) {
  validate_certificate_shape(cert, loc);
  const auto kind = cert.at("kind").get<std::string>();
  const std::size_t before = rep.issues.size();

  if (is_primitive(kind)) {
    Certificate fresh;
    try {
      fresh = regenerate_primitive(kind, cert.at("inputs"));
    } catch (const std::exception& e) {
      rep.issues.push_back({field(loc, "inputs"), std::string("cannot recompute: ") + e.what()});
      return false;
    }
    return compare_certificate(cert, fresh, loc, rep) && fresh.ok();
  }

  bool holds = true;
  const Json& steps = cert.at("steps");
  for (std::size_t j = 0; j < steps.size(); ++j) holds = replay_step(steps.at(j), index(loc, "steps", j), rep) && holds;
  if (steps.empty()) {
    rep.issues.push_back({field(loc, "steps"), "no steps to replay"});
    holds = false;
  }
  const Json recomputed = holds ? "pass" : "fail";
  if (cert.at("verdict") != recomputed && rep.issues.size() == before) {
    rep.issues.push_back({field(loc, "verdict"), "recomputed verdict is " + recomputed.get<std::string>()});
  }
  return holds && rep.issues.size() == before;
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Translate the byte offset into line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ReplayError("line " + std::to_string(line) + ", column " + std::to_string(col),
                      text.find_first_not_of(" \t\r\n") == std::string::npos ? "parse error: empty document"
                                                                              : "parse error");
  }
}

ReplayReport replay_document(const Json& doc) {
  if (!doc.is_object()) throw ReplayError("", "expected a JSON object");
  if (doc.contains("entries")) return replay_ledger(doc);
  const Json* cert = &doc;
  std::string loc;
  if (!doc.contains("kind") && doc.contains("certificate")) {
    cert = &doc.at("certificate");
    loc = "certificate";
  }
  if (!cert->is_object() || !cert->contains("kind")) {
    throw ReplayError("", "neither a ledger nor a certificate (no 'entries' or 'kind')");
  }
  ReplayReport rep;
  rep.document = cert->at("kind").is_string() ? cert->at("kind").get<std::string>() : "";
  const bool ok = replay_certificate_json(*cert, loc, rep);
  rep.verdict = ok && rep.issues.empty();
  return rep;
}

ReplayReport replay_certificate(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ReplayError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return replay_document(parse_document(buf.str()));
}

}  // namespace cenbm
