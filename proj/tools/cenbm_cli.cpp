// cenbm: certify, replay and explore the centroid Banach-Mazur distance.
//
// Exit codes: 0 pass, 1 certificate or check failure, 2 usage or input error.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "cenbm/certifier.hpp"
#include "cenbm/estimator.hpp"
#include "cenbm/extensions.hpp"
#include "cenbm/figures.hpp"
#include "cenbm/replay.hpp"
#include "cenbm/report.hpp"

using namespace cenbm;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Json& report, const RunConfig& cfg) {
  const std::string text = serialize(with_provenance(report, cfg));
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    write_text_file(cfg.output, text);
  }
}

ConvexPolygon load_polygon(const std::string& path) {
  try {
    return ConvexPolygon::from_json(read_json_file(path));
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Json vertices_json(const std::vector<Point2>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(p.to_json());
  return out;
}

Json scan_report(const std::string& body_name, const ConvexPolygon& body, const ScanResult& r, int bound) {
  return Json{{"body", Json{{"name", body_name}, {"vertices", vertices_json(body.vertices())}}},
              {"samples", r.samples},
              {"max_gauge", r.max_gauge.str()},
              {"witness_triangle", vertices_json(r.witness.vertices())},
              {"bound", Rational(bound).str()},
              {"within_bound", r.max_gauge <= Rational(bound)}};
}

int run_certify(RunConfig& cfg, int grid, bool tamper) {
  if (grid < 1) throw UsageError("--grid must be positive");
  CoverConfig cover;
  cover.grid_step = Rational(1, grid);
  // Test hook: a threshold that no longer yields the stated covering.
  if (tamper) cover.case1.ac = {1, Q(-1, 2)};
  cfg.overrides = Json{{"grid", grid}, {"tamper_case1", tamper}};
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const ProofLedger ledger = certify_theorem(cover);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(ledger.to_json(), cfg);
  std::cerr << "certify: " << (ledger.verdict ? "pass" : "fail") << " (" << ledger.entries.size() << " entries, "
            << secs << " s)\n";
  if (!ledger.verdict) {
    std::cerr << "first failing entry: " << ledger.first_failure() << '\n';
    return kFail;
  }
  return kPass;
}

int run_replay(RunConfig& cfg) {
  cfg.validate();
  ReplayReport r;
  try {
    r = replay_certificate(cfg.inputs.at(0));
  } catch (const ReplayError& e) {
    throw UsageError(cfg.inputs.at(0) + ": " + e.what());
  }
  emit(r.to_json(), cfg);
  if (!r.verdict) {
    const auto& first = r.issues.empty() ? ReplayIssue{"", "verdict mismatch"} : r.issues.front();
    std::cerr << "replay: fail at " << first.location << ": " << first.message << '\n';
    return kFail;
  }
  std::cerr << "replay: pass (" << r.steps_replayed << " steps)\n";
  return kPass;
}

int run_distance(RunConfig& cfg, const SearchConfig& search) {
  cfg.overrides = Json{{"search", search.to_json()}};
  cfg.validate();
  try {
    search.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto c = load_polygon(cfg.inputs.at(0));
  const auto d = load_polygon(cfg.inputs.at(1));
  emit(estimate_distance(c, d, search).to_json(), cfg);
  return kPass;
}

int run_oracle(RunConfig& cfg, int grid) {
  cfg.overrides = Json{{"grid", grid}};
  cfg.validate();
  if (grid < 2) throw UsageError("--grid must be at least 2");
  const auto r = grid_oracle_square_triangle(grid);
  emit(Json{{"min_gauge", r.min_gauge.str()},
            {"witness_vertices", vertices_json(r.witness.vertices())},
            {"triangles", r.triangles},
            {"grid", grid}},
       cfg);
  return kPass;
}

int run_claim(RunConfig& cfg, int per_edge) {
  cfg.overrides = Json{{"per_edge", per_edge}};
  cfg.validate();
  const bool custom = !cfg.inputs.empty();
  const auto body = custom ? load_polygon(cfg.inputs[0]) : ConvexPolygon::square();
  const ScanResult r = [&] {
    try {
      return claim_scan(body, per_edge);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  Json rep = scan_report(custom ? cfg.inputs[0] : "square", body, r, 3);
  emit(rep, cfg);
  return rep.at("within_bound").get<bool>() ? kPass : kFail;
}

int run_conjecture(RunConfig& cfg, int per_edge) {
  cfg.overrides = Json{{"per_edge", per_edge}};
  cfg.validate();
  const bool custom = !cfg.inputs.empty();
  const auto body = custom ? load_polygon(cfg.inputs[0]) : ConvexPolygon({{0, 0}, {6, 0}, {0, 6}});
  const ScanResult r = [&] {
    try {
      return conjecture_scan(body, per_edge);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  Json rep = scan_report(custom ? cfg.inputs[0] : "triangle", body, r, 4);
  // Tight example on a reference triangle: the medial triangle -C/2 gives 4,
  // while the homothet -C/4 is not inscribed and gives 8.
  const Triangle t({0, 0}, {6, 0}, {0, 6});
  const Point2 g = t.centroid();
  auto homothet = [&](const Rational& k) {
    return Triangle(g + k * (t.a() - g), g + k * (t.b() - g), g + k * (t.c() - g));
  };
  rep["tight_example"] = Json{
      {"reference_triangle", vertices_json(t.vertices())},
      {"medial_ratio", "-1/2"},
      {"medial_gauge", gauge_factor(t.polygon(), homothet(Q(-1, 2)).polygon(), g).str()},
      {"quarter_ratio", "-1/4"},
      {"quarter_gauge", gauge_factor(t.polygon(), homothet(Q(-1, 4)).polygon(), g).str()},
      {"note", "the -1/4 homothet is not inscribed and has gauge 8; the medial triangle (-1/2) attains 4"}};
  emit(rep, cfg);
  return rep.at("within_bound").get<bool>() ? kPass : kFail;
}

int run_cube_simplex(RunConfig& cfg) {
  cfg.validate();
  const Certificate cert = cube_simplex_check();
  const Simplex3 s({Point3{1, 1, 1}, Point3{1, -1, -1}, Point3{-1, 1, -1}, Point3{-1, -1, 1}});
  const Box3 cube{{0, 0, 0}, {1, 1, 1}};
  emit(Json{{"body", cube.to_json()},
            {"samples", 1},
            {"max_gauge", gauge3(cube, s).str()},
            {"witness_triangle", s.to_json()},
            {"certificate", cert.to_json()}},
       cfg);
  return cert.ok() ? kPass : kFail;
}

int run_figures(RunConfig& cfg) {
  if (cfg.outdir.empty()) throw UsageError("--outdir is required");
  cfg.validate();
  Json files = Json::array();
  for (const auto& p : emit_figures(cfg.outdir)) files.push_back(p);
  emit(Json{{"figures", files}}, cfg);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certification and estimation of the centroid Banach-Mazur distance"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  RunConfig cfg;
  int grid = 64;
  int oracle_grid = 16;
  int per_edge = 4;
  bool tamper = false;
  SearchConfig search;
  int steps = search.coarse_grid_steps;
  int rounds = search.refinement_rounds;
  double tolerance = search.tolerance;
  int starts = search.starts;
  std::string file_a, file_b, body;

  auto* certify = app.add_subcommand("certify", "Build and check the proof ledger for delta = 5/2");
  certify->add_option("--out", cfg.output, "Ledger output path (default: stdout)");
  certify->add_option("--grid", grid, "Sweep resolution N (grid step 1/N)")->capture_default_str();
  certify->add_flag("--tamper-case1", tamper, "Negative control: weaken the Case 1 a'c' threshold");

  auto* replay = app.add_subcommand("replay", "Re-verify a ledger or certificate file");
  replay->add_option("file", file_a, "Ledger or certificate JSON")->required();
  replay->add_option("--out", cfg.output, "Replay report path (default: stdout)");

  auto* distance = app.add_subcommand("distance", "Estimate the distance between two polygons");
  distance->add_option("fileC", file_a, "Polygon C")->required();
  distance->add_option("fileD", file_b, "Polygon D")->required();
  distance->add_option("--steps", steps, "Coarse grid steps per parameter")->capture_default_str();
  distance->add_option("--rounds", rounds, "Refinement rounds")->capture_default_str();
  distance->add_option("--tolerance", tolerance, "Reported precision")->capture_default_str();
  distance->add_option("--starts", starts, "Refined coarse cells per direction")->capture_default_str();
  distance->add_option("--out", cfg.output, "Report path (default: stdout)");

  auto* oracle = app.add_subcommand("oracle-search", "Exact grid search over centroid triangles in the square");
  oracle->add_option("--grid", oracle_grid, "Grid steps per side")->capture_default_str();
  oracle->add_option("--out", cfg.output, "Report path (default: stdout)");

  auto* claim = app.add_subcommand("claim", "Scan inscribed centroid triangles of a symmetric body (bound 3)");
  claim->add_option("--body", body, "Centrally symmetric polygon file (default: square)");
  claim->add_option("--per-edge", per_edge, "Samples per edge")->capture_default_str();
  claim->add_option("--out", cfg.output, "Report path (default: stdout)");

  auto* conjecture = app.add_subcommand("conjecture", "Scan inscribed centroid triangles of a convex body (bound 4)");
  conjecture->add_option("--body", body, "Polygon file (default: a triangle)");
  conjecture->add_option("--per-edge", per_edge, "Samples per edge")->capture_default_str();
  conjecture->add_option("--out", cfg.output, "Report path (default: stdout)");

  auto* cube = app.add_subcommand("cube-simplex", "Check the cube/simplex ratio 3");
  cube->add_option("--out", cfg.output, "Report path (default: stdout)");

  auto* figures = app.add_subcommand("figures", "Write the six SVG figures");
  figures->add_option("--outdir", cfg.outdir, "Output directory")->required();
  figures->add_option("--out", cfg.output, "Index report path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (certify->parsed()) {
      cfg.command = "certify";
      return run_certify(cfg, grid, tamper);
    }
    if (replay->parsed()) {
      cfg.command = "replay";
      cfg.inputs = {file_a};
      return run_replay(cfg);
    }
    if (distance->parsed()) {
      cfg.command = "distance";
      cfg.inputs = {file_a, file_b};
      search.coarse_grid_steps = steps;
      search.refinement_rounds = rounds;
      search.tolerance = tolerance;
      search.starts = starts;
      return run_distance(cfg, search);
    }
    if (oracle->parsed()) {
      cfg.command = "oracle-search";
      return run_oracle(cfg, oracle_grid);
    }
    if (claim->parsed() || conjecture->parsed()) {
      cfg.command = claim->parsed() ? "claim" : "conjecture";
      if (!body.empty()) cfg.inputs = {body};
      return claim->parsed() ? run_claim(cfg, per_edge) : run_conjecture(cfg, per_edge);
    }
    if (cube->parsed()) {
      cfg.command = "cube-simplex";
      return run_cube_simplex(cfg);
    }
    cfg.command = "figures";
    return run_figures(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
}
