#pragma once

// SVG illustrations rendered from computed data.
//
// Every figure maps the window [-3, 3]^2 onto the same square canvas (y up).
// Line styles: solid for a'c'-type lines and curves, dashed for b'c', dotted
// for a'b'. Marked points and polygons carry their exact coordinates in
// data-* attributes so they can be checked without parsing geometry.

#include <string>
#include <vector>

namespace cenbm {

struct SvgFigure {
  std::string name;  // file stem, e.g. "fig2"
  std::string svg;
};

/// fig1/fig3: S with a sample Case 1/Case 2 triangle and its 5/2 image;
/// fig2/fig4: parameter regions V and W with covering curves and the
/// triple points (1/2, 1/2) and (1/5, -1/5); fig5: the two extremal
/// triangles with their 5/2 images; fig6: triangle vs parallelogram from
/// the estimator's best map.
std::vector<SvgFigure> render_figures();

/// Writes <outdir>/<name>.svg for every figure (creating outdir if needed)
/// and returns the paths. Throws std::runtime_error if anything cannot be
/// written.
std::vector<std::string> emit_figures(const std::string& outdir);

}  // namespace cenbm
