#include "cenbm/figures.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>

#include "cenbm/certifier.hpp"
#include "cenbm/estimator.hpp"
#include "cenbm/report.hpp"

namespace cenbm {

namespace {

constexpr double kCanvas = 720.0;
constexpr int kWindow = 3;  // [-3, 3]^2

enum class Stroke { Solid, Dashed, Dotted };

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

double px(double x) { return (x + kWindow) / (2 * kWindow) * kCanvas; }
double py(double y) { return (kWindow - y) / (2 * kWindow) * kCanvas; }

std::string exact(const Point2& p) { return p.x.str() + "," + p.y.str(); }

class Svg {
 public:
  explicit Svg(const std::string& title) {
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<!-- generator: cenbm " << tool_version() << " -->\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\"" << kCanvas
         << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n"
         << "<title>" << title << "</title>\n"
         << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }

  void axes(const std::string& xlabel, const std::string& ylabel) {
    out_ << "<g class=\"axes\" stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
    raw_line(-kWindow, 0, kWindow, 0);
    raw_line(0, -kWindow, 0, kWindow);
    out_ << "</g>\n";
    text({Q(29, 10), Q(-1, 5)}, xlabel);
    text({Q(1, 10), Q(29, 10)}, ylabel);
  }

  void polygon(const std::vector<Point2>& pts, const std::string& cls, const std::string& stroke,
               const std::string& fill = "none", Stroke style = Stroke::Solid) {
    out_ << "<polygon class=\"" << cls << "\" data-vertices=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) out_ << (i ? " " : "") << exact(pts[i]);
    out_ << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      out_ << (i ? " " : "") << num(px(pts[i].x.to_double())) << ',' << num(py(pts[i].y.to_double()));
    }
    out_ << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"2\"" << dash(style) << "/>\n";
  }

  // The part of an exact line inside the window.
  void line(const Line2& l, const std::string& cls, Stroke style, const std::string& color = "black") {
    std::vector<Point2> hits;
    const Rational w(kWindow);
    for (const Line2& side : {Line2(1, 0, w), Line2(1, 0, -w), Line2(0, 1, w), Line2(0, 1, -w)}) {
      const auto p = line_intersection(l, side);
      if (p && -w <= p->x && p->x <= w && -w <= p->y && p->y <= w) hits.push_back(*p);
    }
    if (hits.size() < 2) return;
    const auto [lo, hi] = std::minmax_element(hits.begin(), hits.end());
    out_ << "<line class=\"" << cls << "\" data-line=\"" << l.str() << "\" x1=\"" << num(px(lo->x.to_double()))
         << "\" y1=\"" << num(py(lo->y.to_double())) << "\" x2=\"" << num(px(hi->x.to_double())) << "\" y2=\""
         << num(py(hi->y.to_double())) << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"" << dash(style)
         << "/>\n";
  }

  // Polyline through samples of a curve; breaks where f is undefined or
  // leaves the window.
  void curve(const std::string& cls, const Rational& lo, const Rational& hi, int samples,
             const std::function<std::optional<Rational>(const Rational&)>& f, Stroke style) {
    std::vector<std::string> runs;
    std::string current;
    int count = 0;
    auto flush = [&] {
      if (count >= 2) runs.push_back(current);
      current.clear();
      count = 0;
    };
    for (int k = 0; k <= samples; ++k) {
      const Rational x = lo + (hi - lo) * Rational(k, samples);
      const auto y = f(x);
      if (!y || y->abs() > Rational(kWindow)) {
        flush();
        continue;
      }
      current += (count ? " " : "") + num(px(x.to_double())) + "," + num(py(y->to_double()));
      ++count;
    }
    flush();
    for (const auto& r : runs) {
      out_ << "<polyline class=\"" << cls << "\" points=\"" << r << "\" fill=\"none\" stroke=\"black\""
           << " stroke-width=\"1.5\"" << dash(style) << "/>\n";
    }
  }

  void mark(const Point2& p, const std::string& label) {
    out_ << "<circle class=\"marked\" data-x=\"" << p.x.str() << "\" data-y=\"" << p.y.str() << "\" cx=\""
         << num(px(p.x.to_double())) << "\" cy=\"" << num(py(p.y.to_double())) << "\" r=\"4\" fill=\"red\"/>\n";
    text(p, label);
  }

  void text(const Point2& at, const std::string& s) {
    out_ << "<text x=\"" << num(px(at.x.to_double()) + 6) << "\" y=\"" << num(py(at.y.to_double()) - 6)
         << "\" font-family=\"sans-serif\" font-size=\"14\">" << s << "</text>\n";
  }

  void caption(const std::string& s) {
    out_ << "<text x=\"12\" y=\"" << num(kCanvas - 12) << "\" font-family=\"sans-serif\" font-size=\"14\">" << s
         << "</text>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  static std::string dash(Stroke s) {
    switch (s) {
      case Stroke::Dashed: return " stroke-dasharray=\"8 5\"";
      case Stroke::Dotted: return " stroke-dasharray=\"2 4\"";
      default: return "";
    }
  }

  void raw_line(double x1, double y1, double x2, double y2) {
    out_ << "<line x1=\"" << num(px(x1)) << "\" y1=\"" << num(py(y1)) << "\" x2=\"" << num(px(x2)) << "\" y2=\""
         << num(py(y2)) << "\"/>\n";
  }

  std::ostringstream out_;
};

const Point2 kOrigin{0, 0};

void square_and_triangle(Svg& svg, const Triangle& t, const std::string& color) {
  svg.polygon(t.vertices(), "triangle", color, "none");
  svg.polygon(homothety(t, kOrigin, kCriticalRatio).vertices(), "scaled", color, "none", Stroke::Dashed);
}

std::string fig1() {
  const Case1Params p{Q(1, 4), Q(1, 4)};
  const Triangle t = case1_triangle(p);
  Svg svg("Case 1: triangle in S and its 5/2 image");
  svg.axes("x", "y");
  svg.polygon(ConvexPolygon::square().vertices(), "square", "#1f4e9c", "#e8eef8");
  svg.polygon(t.vertices(), "triangle", "black", "none");
  svg.polygon(homothety(t, kOrigin, kCriticalRatio).vertices(), "scaled", "#888888");
  const auto [lac, lbc] = case1_scaled_lines(p);
  svg.line(lac, "l_ac", Stroke::Solid, "#c0392b");
  svg.line(lbc, "l_bc", Stroke::Dashed, "#c0392b");
  svg.text({1, p.alpha}, "a");
  svg.text({-1, p.beta}, "b");
  svg.text({0, -p.alpha - p.beta}, "c");
  svg.mark(kOrigin, "o");
  svg.caption("alpha = 1/4, beta = 1/4");
  return svg.finish();
}

std::string fig2() {
  const Case1Thresholds th;
  Svg svg("Region V in the (alpha, beta) plane");
  svg.axes("alpha", "beta");
  svg.polygon({{0, 0}, {1, -1}, {1, 0}, {0, 1}}, "region", "#1f4e9c", "#e8eef8");
  // beta = intercept + slope*alpha  <=>  -slope*alpha + beta = intercept
  svg.line(Line2(-th.ac.slope, 1, th.ac.intercept), "threshold_ac", Stroke::Solid);
  svg.line(Line2(-th.bc.slope, 1, th.bc.intercept), "threshold_bc", Stroke::Dashed);
  const auto meet = line_intersection(Line2(-th.ac.slope, 1, th.ac.intercept), Line2(-th.bc.slope, 1, th.bc.intercept));
  if (meet) svg.mark(*meet, "(" + meet->x.str() + ", " + meet->y.str() + ")");
  svg.caption("solid: beta = (2 - alpha)/3, dashed: beta = 2 - 3 alpha");
  return svg.finish();
}

std::string fig3() {
  const Case2Params p{Q(1, 2), Q(-1, 2)};
  const Triangle t = case2_triangle(p);
  Svg svg("Case 2: triangle in S and its 5/2 image");
  svg.axes("x", "y");
  svg.polygon(ConvexPolygon::square().vertices(), "square", "#1f4e9c", "#e8eef8");
  svg.polygon(t.vertices(), "triangle", "black", "none");
  svg.polygon(homothety(t, kOrigin, kCriticalRatio).vertices(), "scaled", "#888888");
  const auto [lab, lbc, lac] = case2_scaled_lines(p);
  svg.line(lab, "l_ab", Stroke::Dotted, "#c0392b");
  svg.line(lbc, "l_bc", Stroke::Dashed, "#c0392b");
  svg.line(lac, "l_ac", Stroke::Solid, "#c0392b");
  svg.text({1, p.alpha}, "a");
  svg.text({-1 - p.gamma, 1 - p.alpha}, "b");
  svg.text({p.gamma, -1}, "c");
  svg.mark(kOrigin, "o");
  svg.caption("alpha = 1/2, gamma = -1/2");
  return svg.finish();
}

std::string fig4() {
  Svg svg("Region W in the (alpha, gamma) plane");
  svg.axes("alpha", "gamma");
  svg.polygon({{0, -1}, {1, -1}, {1, 0}, {0, 0}}, "region", "#1f4e9c", "#e8eef8");
  auto guarded = [](Rational (*g)(const Rational&)) {
    return [g](const Rational& a) -> std::optional<Rational> {
      try {
        return g(a);
      } catch (const std::domain_error&) {
        return std::nullopt;
      }
    };
  };
  // Sample on each side of the poles separately so no segment spans one.
  svg.curve("threshold_ab", 0, Q(2, 5), 160, guarded(threshold_ab), Stroke::Dotted);
  svg.curve("threshold_ab", Q(2, 5), 1, 240, guarded(threshold_ab), Stroke::Dotted);
  svg.curve("threshold_bc", 0, Q(4, 5), 320, guarded(threshold_bc), Stroke::Dashed);
  svg.curve("threshold_bc", Q(4, 5), 1, 80, guarded(threshold_bc), Stroke::Dashed);
  svg.curve("threshold_ac", 0, 1, 400, guarded(threshold_ac), Stroke::Solid);
  const auto g = case2_thresholds(Q(1, 5));
  svg.mark({Q(1, 5), g.g_ac}, "(1/5, " + g.g_ac.str() + ")");
  svg.caption("dotted: g_ab, dashed: g_bc, solid: g_ac");
  return svg.finish();
}

std::string fig5() {
  const auto tris = extremal_triangles();
  Svg svg("Extremal triangles in S and their 5/2 images");
  svg.axes("x", "y");
  svg.polygon(ConvexPolygon::square().vertices(), "square", "#1f4e9c", "#e8eef8");
  square_and_triangle(svg, tris.at(0), "black");
  square_and_triangle(svg, tris.at(1), "#c0392b");
  svg.mark(kOrigin, "o");
  svg.caption("both triangles have gauge 5/2 about o");
  return svg.finish();
}

std::string fig6() {
  // C = triangle, D = square: a(D) sits in C and C sits in lambda a(D).
  const ConvexPolygon tri({{Q(-3, 2), Q(-1, 1)}, {Q(3, 2), Q(-1, 1)}, {0, 2}});
  const auto est = estimate_distance(tri, ConvexPolygon::square());
  const auto inner = apply_affine(est.best_map, ConvexPolygon::square());
  const Point2 g = polygon_centroid(tri);
  Svg svg("Triangle vs parallelogram at the estimator's best map");
  svg.axes("x", "y");
  svg.polygon(tri.vertices(), "triangle", "black", "#f4f4f4");
  svg.polygon(inner.vertices(), "parallelogram", "#1f4e9c", "#e8eef8");
  svg.polygon(homothety(inner, g, est.exact_value()).vertices(), "scaled", "#1f4e9c", "none", Stroke::Dashed);
  svg.mark(g, "centroid");
  char buf[64];
  std::snprintf(buf, sizeof buf, "lambda = %.6f (upper bound)", est.lambda_hat);
  svg.caption(buf);
  return svg.finish();
}

}  // namespace

std::vector<SvgFigure> render_figures() {
  return {{"fig1", fig1()}, {"fig2", fig2()}, {"fig3", fig3()}, {"fig4", fig4()}, {"fig5", fig5()}, {"fig6", fig6()}};
}

std::vector<std::string> emit_figures(const std::string& outdir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(outdir, ec);
  if (!fs::is_directory(outdir)) throw std::runtime_error("cannot create output directory " + outdir);
  const auto figs = render_figures();
  std::vector<std::string> paths;
  for (const auto& f : figs) {
    const std::string path = (fs::path(outdir) / (f.name + ".svg")).string();
    write_text_file(path, f.svg);
    paths.push_back(path);
  }
  return paths;
}

}  // namespace cenbm
