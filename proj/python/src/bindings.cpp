// Python bindings. Structured values cross the boundary as JSON text; the
// pure-Python layer in cenbm/__init__.py decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cenbm/certifier.hpp"
#include "cenbm/estimator.hpp"
#include "cenbm/extensions.hpp"
#include "cenbm/figures.hpp"
#include "cenbm/replay.hpp"
#include "cenbm/report.hpp"

namespace py = pybind11;
using namespace cenbm;

namespace {

ConvexPolygon polygon(const std::string& vertices_json) {
  return ConvexPolygon::from_json(Json{{"vertices", Json::parse(vertices_json)}});
}

Json scan_json(const ScanResult& r) {
  Json w = Json::array();
  for (const auto& v : r.witness.vertices()) w.push_back(v.to_json());
  return Json{{"samples", r.samples}, {"max_gauge", r.max_gauge.str()}, {"witness_triangle", w}};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact centroid Banach-Mazur distance tools";
  m.attr("__version__") = tool_version();

  m.def(
      "certify",
      [](long grid, bool tamper) {
        if (grid < 1) throw std::invalid_argument("grid must be positive");
        CoverConfig cfg;
        cfg.grid_step = Rational(1, grid);
        if (tamper) cfg.case1.ac = {1, Q(-1, 2)};
        py::gil_scoped_release release;
        return certify_theorem(cfg).to_json().dump();
      },
      py::arg("grid") = 64, py::arg("tamper_case1") = false);

  m.def("replay", [](const std::string& text) {
    const Json doc = parse_document(text);
    py::gil_scoped_release release;
    return replay_document(doc).to_json().dump();
  });

  m.def("gauge_factor", [](const std::string& body, const std::string& against, const std::string& center) {
    return gauge_factor(polygon(body), polygon(against), Point2::from_json(Json::parse(center))).str();
  });

  m.def("polygon_centroid", [](const std::string& vertices) { return polygon_centroid(polygon(vertices)).to_json().dump(); });

  m.def(
      "estimate_distance",
      [](const std::string& c, const std::string& d, int steps, int rounds, double tolerance, int starts) {
        SearchConfig cfg;
        cfg.coarse_grid_steps = steps;
        cfg.refinement_rounds = rounds;
        cfg.tolerance = tolerance;
        cfg.starts = starts;
        const auto pc = polygon(c);
        const auto pd = polygon(d);
        py::gil_scoped_release release;
        return estimate_distance(pc, pd, cfg).to_json().dump();
      },
      py::arg("c"), py::arg("d"), py::arg("steps") = SearchConfig{}.coarse_grid_steps,
      py::arg("rounds") = SearchConfig{}.refinement_rounds, py::arg("tolerance") = SearchConfig{}.tolerance,
      py::arg("starts") = SearchConfig{}.starts);

  m.def("grid_oracle", [](int steps) {
    OracleResult r = [&] {
      py::gil_scoped_release release;
      return grid_oracle_square_triangle(steps);
    }();
    Json w = Json::array();
    for (const auto& v : r.witness.vertices()) w.push_back(v.to_json());
    return Json{{"min_gauge", r.min_gauge.str()}, {"witness_vertices", w}, {"triangles", r.triangles}}.dump();
  });

  m.def("claim_check", [](const std::string& triangle) {
    const auto p = polygon(triangle);
    if (p.size() != 3) throw std::invalid_argument("expected three vertices");
    return claim_check(Triangle(p[0], p[1], p[2])).to_json().dump();
  });

  m.def("claim_scan", [](const std::string& body, int per_edge) { return scan_json(claim_scan(polygon(body), per_edge)).dump(); });
  m.def("conjecture_scan",
        [](const std::string& body, int per_edge) { return scan_json(conjecture_scan(polygon(body), per_edge)).dump(); });
  m.def("cube_simplex_check", [] { return cube_simplex_check().to_json().dump(); });
  m.def("emit_figures", [](const std::string& outdir) { return emit_figures(outdir); });
}
