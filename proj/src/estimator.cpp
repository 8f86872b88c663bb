#include "cenbm/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "cenbm/parallel.hpp"

namespace cenbm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Vec {
  double x, y;
};

std::vector<Vec> centered_doubles(const ConvexPolygon& p) {
  const Point2 g = polygon_centroid(p);
  std::vector<Vec> out;
  for (const auto& v : p.vertices()) out.push_back({(v.x - g.x).to_double(), (v.y - g.y).to_double()});
  return out;
}

// Max (mu = 0) or log-sum-exp soft max at temperature mu of the support
// ratios n.v / h over edges of `against` and vertices of `body`.
// Orientation-free: flipping the winding negates both n and h.
double gauge_d(const std::vector<Vec>& body, const std::vector<Vec>& against, double mu = 0) {
  thread_local std::vector<double> terms;
  terms.clear();
  double best = 0;
  const std::size_t n = against.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec p = against[i], q = against[(i + 1) % n];
    const double nx = q.y - p.y, ny = p.x - q.x;
    const double h = nx * p.x + ny * p.y;
    if (std::abs(h) < 1e-14) return kInf;
    for (const auto& v : body) {
      const double t = (nx * v.x + ny * v.y) / h;
      best = std::max(best, t);
      if (mu > 0) terms.push_back(t);
    }
  }
  if (mu <= 0) return best;
  double sum = 0;
  for (double t : terms) sum += std::exp((t - best) / mu);
  return best + mu * std::log(sum);
}

using Mat2 = std::array<double, 4>;  // row-major

Mat2 mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 inverse(const Mat2& a) {
  const double det = a[0] * a[3] - a[1] * a[2];
  return {a[3] / det, -a[1] / det, -a[2] / det, a[0] / det};
}

// Whitening map S^(-1/2) for the vertex second-moment matrix S of centered
// points; affine-equivariant, so A(C) and C whiten to orthogonal images.
Mat2 whitening(const std::vector<Vec>& pts) {
  double a = 0, b = 0, c = 0;
  for (const auto& p : pts) {
    a += p.x * p.x;
    b += p.x * p.y;
    c += p.y * p.y;
  }
  const double k = static_cast<double>(pts.size());
  a /= k, b /= k, c /= k;
  const double s = std::sqrt(a * c - b * b);
  const double t = std::sqrt(a + c + 2 * s);
  return inverse({(a + s) / t, b / t, b / t, (c + s) / t});
}

std::vector<Vec> apply(const Mat2& m, const std::vector<Vec>& pts) {
  std::vector<Vec> out;
  for (const auto& p : pts) out.push_back({m[0] * p.x + m[1] * p.y, m[2] * p.x + m[3] * p.y});
  return out;
}

using Params = std::array<double, 3>;

// Two charts (without / with a reflection). In whitened coordinates the
// optimum is close to orthogonal, so write L = R(theta) F [[e^u, b], [0, 1]]
// with F = diag(1, -1) in chart 1; x in [-1, 1]^3 maps to theta = pi (x0 + 1),
// u = 3/2 x1, b = 3/2 x2. A rotation of C only shifts theta.
constexpr int kCharts = 2;

std::array<double, 4> chart_matrix(int chart, const Params& x) {
  const double theta = std::numbers::pi * (x[0] + 1), e = std::exp(1.5 * x[1]), b = 1.5 * x[2];
  const double flip = chart == 1 ? -1.0 : 1.0;
  const double co = std::cos(theta), si = std::sin(theta);
  // R(theta) * [[e, b], [0, flip]]
  return {co * e, co * b - si * flip, si * e, si * b + co * flip};
}

struct Problem {
  std::vector<Vec> c, d;

  double eval(const std::array<double, 4>& m, double mu = 0) const {
    const double det = m[0] * m[3] - m[1] * m[2];
    if (std::abs(det) < 1e-9) return kInf;
    std::vector<Vec> e;
    e.reserve(d.size());
    for (const auto& v : d) e.push_back({m[0] * v.x + m[1] * v.y, m[2] * v.x + m[3] * v.y});
    return gauge_d(c, e, mu) * gauge_d(e, c, mu);
  }
  double eval(int chart, const Params& x, double mu = 0) const { return eval(chart_matrix(chart, x), mu); }
};

struct Candidate {
  double value;
  int chart;
  Params x;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.chart != b.chart) return a.chart < b.chart;
  return a.x < b.x;
}

// Pattern search on a smoothed objective whose temperature shrinks with the
// step; the last rounds polish on the exact max.
Candidate refine(const Problem& pr, Candidate start, double step, const SearchConfig& cfg) {
  constexpr int kExactRounds = 8;
  const double shrink = cfg.shrink_factor.to_double();
  double mu = 0.05;
  for (int round = 0; round < cfg.refinement_rounds; ++round) {
    const double t = round + kExactRounds < cfg.refinement_rounds ? mu : 0.0;
    double fx = pr.eval(start.chart, start.x, t);
    for (int moves = 0; moves < 64; ++moves) {
      Params best = start.x;
      double fbest = fx;
      for (int dir = 0; dir < 27; ++dir) {
        if (dir == 13) continue;  // zero direction
        Params y = start.x;
        y[0] += step * (dir % 3 - 1);
        y[1] += step * (dir / 3 % 3 - 1);
        y[2] += step * (dir / 9 - 1);
        const double v = pr.eval(start.chart, y, t);
        if (v < fbest) {
          fbest = v;
          best = y;
        }
      }
      if (!(fbest < fx)) break;
      start.x = best;
      fx = fbest;
    }
    step *= shrink;
    mu *= shrink;
  }
  start.value = pr.eval(start.chart, start.x);
  return start;
}

ConvexPolygon translated(const ConvexPolygon& p, const Point2& by) {
  std::vector<Point2> out;
  for (const auto& v : p.vertices()) out.push_back(v + by);
  return ConvexPolygon(std::move(out));
}

}  // namespace

void SearchConfig::validate() const {
  if (coarse_grid_steps < 1 || refinement_rounds < 1 || starts < 1)
    throw std::invalid_argument("search config: counts must be at least 1");
  if (shrink_factor.sign() <= 0 || shrink_factor >= Rational(1))
    throw std::invalid_argument("search config: shrink factor must lie in (0, 1)");
  if (!(tolerance > 0)) throw std::invalid_argument("search config: tolerance must be positive");
}

Json SearchConfig::to_json() const {
  return Json{{"coarse_grid_steps", coarse_grid_steps}, {"refinement_rounds", refinement_rounds},
              {"shrink_factor", shrink_factor.str()},    {"tolerance", tolerance},
              {"starts", starts}};
}

Rational objective(const AffineMap2& linear, const ConvexPolygon& c, const ConvexPolygon& d) {
  const AffineMap2 l = AffineMap2::linear(linear.m11, linear.m12, linear.m21, linear.m22);
  if (l.det().is_zero()) throw std::invalid_argument("objective: singular linear map");
  const Point2 o{0, 0};
  const auto cc = translated(c, -polygon_centroid(c));
  const auto e = apply_affine(l, translated(d, -polygon_centroid(d)));
  return gauge_factor(cc, e, o) * gauge_factor(e, cc, o);
}

Json DistanceEstimate::to_json() const {
  return Json{{"lambda_hat", lambda_hat},
              {"exact_value", exact_value().str()},
              {"best_map", best_map.to_json()},
              {"exact_gauges", Json::array({exact_gauges[0].str(), exact_gauges[1].str()})},
              {"estimate_kind", upper_bound ? "upper_bound" : "exact"}};
}

namespace {

// Best linear map (original coordinates) sending centered D near centered C.
Candidate search(const std::vector<Vec>& cd, const std::vector<Vec>& dd, const SearchConfig& cfg, Mat2& map) {
  const Mat2 wc = whitening(cd), wd = whitening(dd);
  const Problem pr{apply(wc, cd), apply(wd, dd)};
  const int n = cfg.coarse_grid_steps;
  const double pitch = n > 1 ? 2.0 / (n - 1) : 1.0;
  auto coord = [&](int k) { return n > 1 ? -1.0 + pitch * k : 0.0; };
  auto angle = [&](int k) { return -1.0 + 2.0 * k / n; };  // periodic

  // Coarse grid: rows are (chart, angle index).
  const std::size_t rows = kCharts * static_cast<std::size_t>(n);
  std::vector<Candidate> cells(rows * n * n);
  parallel_for(rows, [&](std::size_t r) {
    const int chart = static_cast<int>(r) / n, k0 = static_cast<int>(r) % n;
    for (int k1 = 0; k1 < n; ++k1)
      for (int k2 = 0; k2 < n; ++k2) {
        const Params x{angle(k0), coord(k1), coord(k2)};
        cells[(r * n + k1) * n + k2] = {pr.eval(chart, x), chart, x};
      }
  });
  const std::size_t starts = std::min<std::size_t>(cfg.starts, cells.size());
  std::partial_sort(cells.begin(), cells.begin() + starts, cells.end(), better);

  std::vector<Candidate> refined(starts);
  parallel_for(starts, [&](std::size_t i) { refined[i] = refine(pr, cells[i], pitch, cfg); });
  const Candidate best = *std::min_element(refined.begin(), refined.end(), better);
  map = mul(inverse(wc), mul(chart_matrix(best.chart, best.x), wd));
  return best;
}

}  // namespace

DistanceEstimate estimate_distance(const ConvexPolygon& c, const ConvexPolygon& d, const SearchConfig& cfg) {
  cfg.validate();
  const auto cd = centered_doubles(c), dd = centered_doubles(d);
  // F(C, D; L) = F(D, C; L^-1): search both ways and keep the better map.
  Mat2 forward{}, backward{};
  const Candidate f = search(cd, dd, cfg, forward);
  const Candidate b = search(dd, cd, cfg, backward);
  if (!std::isfinite(f.value) && !std::isfinite(b.value))
    throw std::runtime_error("estimator: no nonsingular map found");
  const Mat2 m = f.value <= b.value ? forward : inverse(backward);

  // Exact endpoint.
  const AffineMap2 l = AffineMap2::linear(Rational::from_double(m[0]), Rational::from_double(m[1]),
                                          Rational::from_double(m[2]), Rational::from_double(m[3]));
  const Point2 o{0, 0};
  const Point2 gc = polygon_centroid(c), gd = polygon_centroid(d);
  const auto cc = translated(c, -gc);
  const auto e = apply_affine(l, translated(d, -gd));
  const Rational outer = gauge_factor(cc, e, o);
  const Rational inner = gauge_factor(e, cc, o);
  // Scale so a(D) sits inside C touching its boundary.
  const Rational s = Rational(1) / inner;
  AffineMap2 a{s * l.m11, s * l.m12, s * l.m21, s * l.m22, 0, 0};
  const Point2 shift = gc - a(gd);
  a.t1 = shift.x;
  a.t2 = shift.y;

  DistanceEstimate est;
  est.best_map = a;
  est.exact_gauges = {outer * inner, Rational(1)};
  est.lambda_hat = est.exact_value().to_double();
  return est;
}

std::vector<Triangle> square_symmetry_images(const Triangle& t) {
  std::vector<Triangle> out;
  for (int k = 0; k < 8; ++k) {
    auto f = [k](const Point2& p) {
      Point2 q = (k & 4) ? Point2{p.y, p.x} : p;
      if (k & 1) q.x = -q.x;
      if (k & 2) q.y = -q.y;
      return q;
    };
    out.emplace_back(f(t.a()), f(t.b()), f(t.c()));
  }
  return out;
}

bool equal_up_to_square_symmetry(const Triangle& s, const Triangle& t) {
  const auto imgs = square_symmetry_images(t);
  return std::any_of(imgs.begin(), imgs.end(), [&](const Triangle& u) { return u.polygon().same_as(s.polygon()); });
}

OracleResult grid_oracle_square_triangle(int steps) {
  if (steps < 2) throw std::invalid_argument("oracle: steps must be at least 2");
  const int side = steps + 1;
  std::vector<Point2> pts;
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) pts.push_back({Rational(2 * i - steps, steps), Rational(2 * j - steps, steps)});
  // Grid index of v3, or none when it falls between grid points.
  auto index_of = [&](const Point2& p) -> std::optional<std::size_t> {
    const Rational i = (p.x + Rational(1)) * Rational(steps, 2);
    const Rational j = (p.y + Rational(1)) * Rational(steps, 2);
    if (i.den() != 1 || j.den() != 1) return std::nullopt;
    return static_cast<std::size_t>(i.num().get_si() * side + j.num().get_si());
  };
  using Key = std::array<Point2, 3>;

  const auto square = ConvexPolygon::square();
  const Point2 o{0, 0};
  struct Best {
    std::optional<Rational> gauge;
    Key key;
    std::size_t count = 0;
  };
  std::vector<Best> rows(pts.size());
  parallel_for(pts.size(), [&](std::size_t i1) {
    Best& b = rows[i1];
    for (std::size_t i2 = i1 + 1; i2 < pts.size(); ++i2) {
      const Point2 v3 = -(pts[i1] + pts[i2]);
      if (v3.x.abs() > Rational(1) || v3.y.abs() > Rational(1)) continue;
      // A grid v3 is reached from three pairs; keep only the sorted one.
      const auto i3 = index_of(v3);
      if ((i3 && *i3 <= i2) || orient(pts[i1], pts[i2], v3).is_zero()) continue;
      ++b.count;
      const Rational g = gauge_factor(square, ConvexPolygon({pts[i1], pts[i2], v3}), o);
      Key key{pts[i1], pts[i2], v3};
      std::sort(key.begin(), key.end());
      if (!b.gauge || g < *b.gauge || (g == *b.gauge && key < b.key)) {
        b.gauge = g;
        b.key = key;
      }
    }
  });
  Best total;
  for (const auto& b : rows) {
    total.count += b.count;
    if (b.gauge && (!total.gauge || *b.gauge < *total.gauge || (*b.gauge == *total.gauge && b.key < total.key))) {
      total.gauge = b.gauge;
      total.key = b.key;
    }
  }
  if (!total.gauge) throw std::invalid_argument("oracle: no valid triangle at this resolution");
  return {*total.gauge, Triangle(total.key[0], total.key[1], total.key[2]), total.count};
}

}  // namespace cenbm
