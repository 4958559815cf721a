#include "rsl/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "rsl/error.hpp"
#include "rsl/rng.hpp"

namespace rsl {

// ---------------------------------------------------------------- Point

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error(ErrorCode::InvalidArgument, "point must have dimension >= 1");
  for (double c : coords_) {
    if (!std::isfinite(c)) throw Error(ErrorCode::InvalidArgument, "non-finite coordinate");
  }
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

Point Point::zero(std::size_t dim) { return Point(std::vector<double>(dim, 0.0)); }

Point Point::unit(std::size_t dim, std::size_t axis) {
  std::vector<double> c(dim, 0.0);
  c.at(axis) = 1.0;
  return Point(std::move(c));
}

void require_same_dim(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(where) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

Point& Point::operator+=(const Point& other) {
  require_same_dim(dim(), other.dim(), "point addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& other) {
  require_same_dim(dim(), other.dim(), "point subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Point& Point::operator*=(double factor) {
  for (double& c : coords_) c *= factor;
  return *this;
}

Point operator+(Point a, const Point& b) { return a += b; }
Point operator-(Point a, const Point& b) { return a -= b; }
Point operator*(double factor, Point p) { return p *= factor; }

double dot(const Point& a, const Point& b) {
  require_same_dim(a.dim(), b.dim(), "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Point& p) {
  double s = 0.0;
  for (double c : p.coords()) s += c * c;
  return std::sqrt(s);
}

double distance(const Point& a, const Point& b) {
  require_same_dim(a.dim(), b.dim(), "distance");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

bool approx_equal(const Point& a, const Point& b, double tol) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

Point concat(std::span<const Point> parts) {
  std::vector<double> c;
  for (const auto& p : parts) c.insert(c.end(), p.coords().begin(), p.coords().end());
  return Point(std::move(c));
}

std::vector<Point> unique_points(std::span<const Point> points, double tol) {
  // Lexicographic sort groups duplicates; each run collapses onto its first
  // element in input order.
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  std::vector<bool> keep(points.size(), false);
  std::size_t rep = points.size();
  for (std::size_t idx : order) {
    if (rep != points.size() && approx_equal(points[rep], points[idx], tol)) continue;
    rep = idx;
    keep[idx] = true;
  }
  std::vector<Point> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (keep[i]) out.push_back(points[i]);
  }
  return out;
}

// ---------------------------------------------------------------- Body

Body::Body(std::vector<Point> vertices, std::vector<Ball> balls)
    : vertices_(std::move(vertices)), balls_(std::move(balls)) {
  if (vertices_.empty()) throw Error(ErrorCode::InvalidArgument, "body needs at least one vertex");
  const std::size_t d = vertices_.front().dim();
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "body vertex has dimension 0");
  for (const auto& v : vertices_) require_same_dim(d, v.dim(), "body vertices");
  for (const auto& b : balls_) {
    require_same_dim(d, b.center.dim(), "body ball center");
    if (!(b.radius >= 0.0) || !std::isfinite(b.radius)) {
      throw Error(ErrorCode::InvalidArgument, "ball radius must be finite and >= 0");
    }
  }
}

Body Body::singleton(Point p) { return Body({std::move(p)}); }

Body Body::ball(Point center, double radius) {
  const std::size_t d = center.dim();
  return Body({Point::zero(d)}, {Ball{std::move(center), radius}});
}

Body Body::segment(Point a, Point b) { return Body({std::move(a), std::move(b)}); }

Body Body::interval(double lo, double hi) { return Body({Point{lo}, Point{hi}}); }

Point Body::ball_center_sum() const {
  Point c = Point::zero(dim());
  for (const auto& b : balls_) c += b.center;
  return c;
}

double Body::ball_radius_sum() const {
  double r = 0.0;
  for (const auto& b : balls_) r += b.radius;
  return r;
}

PointCloud::PointCloud(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error(ErrorCode::InvalidArgument, "point cloud must be nonempty");
  const std::size_t d = points_.front().dim();
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "cloud point has dimension 0");
  for (const auto& p : points_) require_same_dim(d, p.dim(), "point cloud");
}

// ---------------------------------------------------------------- DirectionSet

DirectionSet::DirectionSet(std::size_t dim, Rule rule, std::uint64_t seed, std::vector<Point> dirs)
    : dim_(dim), rule_(rule), seed_(seed), directions_(std::move(dirs)) {}

DirectionSet DirectionSet::standard(std::size_t dim, std::size_t count, std::uint64_t seed) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "direction set dimension must be >= 1");
  std::vector<Point> dirs;
  if (dim == 1) {
    dirs = {Point{1.0}, Point{-1.0}};
    return DirectionSet(dim, Rule::Axis1D, seed, std::move(dirs));
  }
  if (dim == 2) {
    const std::size_t n = count == 0 ? 256 : count;
    for (std::size_t k = 0; k < n; ++k) {
      const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
      dirs.push_back(Point{std::cos(t), std::sin(t)});
    }
    return DirectionSet(dim, Rule::Circle, seed, std::move(dirs));
  }
  if (dim == 3) {
    const std::size_t n = count == 0 ? 512 : std::max<std::size_t>(count, 2);
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t k = 0; k < n; ++k) {
      const double z = 1.0 - 2.0 * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden * static_cast<double>(k);
      Point u{r * std::cos(phi), r * std::sin(phi), z};
      dirs.push_back((1.0 / norm(u)) * u);
    }
    return DirectionSet(dim, Rule::FibonacciSphere, seed, std::move(dirs));
  }
  for (std::size_t a = 0; a < dim; ++a) {
    dirs.push_back(Point::unit(dim, a));
    dirs.push_back(-1.0 * Point::unit(dim, a));
  }
  Rng rng = Rng::derive(seed, "directions");
  const std::size_t n = count == 0 ? 1024 : count;
  for (std::size_t k = 0; k < n; ++k) dirs.push_back(rng.unit_vector(dim));
  return DirectionSet(dim, Rule::AxesPlusRandom, seed, std::move(dirs));
}

const char* rule_name(DirectionSet::Rule rule) noexcept {
  switch (rule) {
    case DirectionSet::Rule::Axis1D: return "axis-1d";
    case DirectionSet::Rule::Circle: return "circle";
    case DirectionSet::Rule::FibonacciSphere: return "fibonacci-sphere";
    case DirectionSet::Rule::AxesPlusRandom: return "axes-plus-random";
  }
  return "unknown";
}

// ---------------------------------------------------------------- support calculus

double support(const Body& body, const Point& u) {
  require_same_dim(body.dim(), u.dim(), "support");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : body.vertices()) best = std::max(best, dot(v, u));
  if (!body.balls().empty()) {
    const double un = norm(u);
    for (const auto& b : body.balls()) best += dot(b.center, u) + b.radius * un;
  }
  return best;
}

double support(const PointCloud& cloud, const Point& u) {
  require_same_dim(cloud.dim(), u.dim(), "support");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : cloud.points()) best = std::max(best, dot(v, u));
  return best;
}

Body minkowski_sum(const Body& a, const Body& b) {
  require_same_dim(a.dim(), b.dim(), "minkowski_sum");
  std::vector<Point> verts;
  verts.reserve(a.vertices().size() * b.vertices().size());
  for (const auto& x : a.vertices()) {
    for (const auto& y : b.vertices()) verts.push_back(x + y);
  }
  std::vector<Ball> balls = a.balls();
  balls.insert(balls.end(), b.balls().begin(), b.balls().end());
  return Body(std::move(verts), std::move(balls));
}

Body scale(const Body& body, double factor) {
  if (factor < 0.0) throw Error(ErrorCode::NegativeScale, "scale factor " + std::to_string(factor));
  if (!std::isfinite(factor)) throw Error(ErrorCode::InvalidArgument, "non-finite scale factor");
  std::vector<Point> verts;
  verts.reserve(body.vertices().size());
  for (const auto& v : body.vertices()) verts.push_back(factor * v);
  std::vector<Ball> balls;
  balls.reserve(body.balls().size());
  for (const auto& b : body.balls()) balls.push_back(Ball{factor * b.center, factor * b.radius});
  return Body(std::move(verts), std::move(balls));
}

namespace {

double cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Planar hull vertices (Andrew's monotone chain), collinear points dropped.
// The caller's conditional-gradient pass then removes near-redundant ones.
std::vector<Point> monotone_chain(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<Point> reduce_vertices(std::vector<Point> verts, const Tolerances& tol) {
  verts = unique_points(verts, tol.point_eq);
  if (verts.size() <= 2) return verts;
  if (verts.front().dim() == 1) {
    auto [lo, hi] = std::minmax_element(verts.begin(), verts.end(),
                                        [](const Point& a, const Point& b) { return a[0] < b[0]; });
    if (std::abs((*hi)[0] - (*lo)[0]) <= tol.point_eq) return {*lo};
    return {*lo, *hi};
  }
  if (verts.front().dim() == 2 && verts.size() > 3) verts = monotone_chain(std::move(verts));
  // Remove one redundant generator at a time so duplicates and ties cannot
  // knock out both members of a pair.
  std::size_t i = 0;
  while (i < verts.size() && verts.size() > 1) {
    std::vector<Point> others;
    others.reserve(verts.size() - 1);
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (j != i) others.push_back(verts[j]);
    }
    if (distance_to_hull(verts[i], others, tol) == 0.0) {
      verts.erase(verts.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return verts;
}

}  // namespace

Body reduce(const Body& body, const Tolerances& tol) {
  return Body(reduce_vertices(body.vertices(), tol), body.balls());
}

Body convex_hull(const PointCloud& cloud, const Tolerances& tol) {
  return Body(reduce_vertices(cloud.points(), tol));
}

// ---------------------------------------------------------------- hull projection

namespace {

// Minimizer of ‖Σ α_i q_i‖ over the affine hull of the corral (Σ α_i = 1),
// from the bordered Gram system. Returns false when the corral is affinely
// dependent up to rounding.
bool affine_minimizer(const std::vector<std::vector<double>>& q, const std::vector<std::size_t>& corral,
                      std::vector<double>& alpha) {
  const std::size_t k = corral.size();
  const std::size_t n = k + 1;
  std::vector<double> a(n * (n + 1), 0.0);
  auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * (n + 1) + c]; };
  double scale = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      double g = 0.0;
      const auto& qi = q[corral[i]];
      const auto& qj = q[corral[j]];
      for (std::size_t t = 0; t < qi.size(); ++t) g += qi[t] * qj[t];
      at(i, j) = g;
      scale = std::max(scale, std::abs(g));
    }
    at(i, k) = 1.0;
    at(k, i) = 1.0;
  }
  at(k, n) = 1.0;
  scale = std::max(scale, 1.0);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(at(r, col)) > std::abs(at(piv, col))) piv = r;
    }
    if (std::abs(at(piv, col)) <= 1e-13 * scale) return false;
    if (piv != col) {
      for (std::size_t c = 0; c <= n; ++c) std::swap(at(piv, c), at(col, c));
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = at(r, col) / at(col, col);
      if (f == 0.0) continue;
      for (std::size_t c = col; c <= n; ++c) at(r, c) -= f * at(col, c);
    }
  }
  alpha.assign(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) alpha[i] = at(i, n) / at(i, i);
  return true;
}

}  // namespace

HullProjection project_onto_hull(const Point& p, std::span<const Point> points, const Tolerances& tol) {
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "projection onto empty hull");
  const std::size_t m = points.size();
  const std::size_t d = p.dim();
  for (const auto& v : points) require_same_dim(d, v.dim(), "project_onto_hull");

  // Work with q_i = v_i − p and find the min-norm point of conv(q).
  std::vector<std::vector<double>> q(m, std::vector<double>(d));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < d; ++k) q[i][k] = points[i][k] - p[k];
  }
  auto dotq = [&](const std::vector<double>& x, std::size_t i) {
    double s = 0.0;
    for (std::size_t k = 0; k < d; ++k) s += x[k] * q[i][k];
    return s;
  };

  std::size_t start = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    const double n2 = dotq(q[i], i);
    if (n2 < best) {
      best = n2;
      start = i;
    }
  }

  std::vector<std::size_t> corral{start};
  std::vector<double> lambda{1.0};
  std::vector<double> x = q[start];
  std::vector<double> alpha;
  auto rebuild = [&] {
    std::fill(x.begin(), x.end(), 0.0);
    for (std::size_t j = 0; j < corral.size(); ++j) {
      for (std::size_t k = 0; k < d; ++k) x[k] += lambda[j] * q[corral[j]][k];
    }
  };

  HullProjection out;
  int it = 0;
  for (; it < tol.fw_max_iterations; ++it) {
    double xx = 0.0;
    for (double c : x) xx += c * c;
    std::size_t s = 0;
    double low = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      const double sc = dotq(x, i);
      if (sc < low) {
        low = sc;
        s = i;
      }
    }
    out.gap = xx - low;
    if (out.gap <= tol.fw_gap || std::find(corral.begin(), corral.end(), s) != corral.end()) {
      out.converged = out.gap <= tol.fw_gap || out.gap <= 1e-12 * std::max(1.0, xx);
      break;
    }
    corral.push_back(s);
    lambda.push_back(0.0);

    // Minor cycles: move toward the affine minimizer, dropping corral
    // points whose weight reaches zero.
    while (true) {
      if (!affine_minimizer(q, corral, alpha)) {
        corral.pop_back();
        lambda.pop_back();
        rebuild();
        out.converged = true;
        it = tol.fw_max_iterations;
        break;
      }
      bool interior = true;
      for (double a : alpha) interior = interior && a > 0.0;
      if (interior) {
        lambda = alpha;
        rebuild();
        break;
      }
      double theta = 1.0;
      for (std::size_t j = 0; j < corral.size(); ++j) {
        if (alpha[j] <= 0.0) theta = std::min(theta, lambda[j] / (lambda[j] - alpha[j]));
      }
      for (std::size_t j = 0; j < corral.size(); ++j) lambda[j] = theta * alpha[j] + (1.0 - theta) * lambda[j];
      std::size_t keep = 0;
      for (std::size_t j = 0; j < corral.size(); ++j) {
        if (lambda[j] > 0.0 && !(alpha[j] <= 0.0 && lambda[j] <= 1e-15)) {
          corral[keep] = corral[j];
          lambda[keep] = lambda[j];
          ++keep;
        }
      }
      if (keep == corral.size()) {
        // Rounding left every weight positive; drop the smallest.
        const auto smallest = std::min_element(lambda.begin(), lambda.end()) - lambda.begin();
        corral.erase(corral.begin() + smallest);
        lambda.erase(lambda.begin() + smallest);
        keep = corral.size();
      }
      corral.resize(keep);
      lambda.resize(keep);
      const double total = std::accumulate(lambda.begin(), lambda.end(), 0.0);
      for (double& l : lambda) l /= total;
      rebuild();
    }
    if (it >= tol.fw_max_iterations) break;
  }

  out.weights.assign(m, 0.0);
  for (std::size_t j = 0; j < corral.size(); ++j) out.weights[corral[j]] = lambda[j];
  std::vector<double> y(d, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (out.weights[i] == 0.0) continue;
    for (std::size_t k = 0; k < d; ++k) y[k] += out.weights[i] * points[i][k];
  }
  out.iterations = std::min(it, tol.fw_max_iterations);
  out.nearest = Point(std::move(y));
  out.distance = distance(out.nearest, p);
  return out;
}

double distance_to_hull(const Point& p, std::span<const Point> points, const Tolerances& tol) {
  const HullProjection proj = project_onto_hull(p, points, tol);
  return proj.distance <= tol.membership ? 0.0 : proj.distance;
}

double distance_to_hull(const Point& p, const PointCloud& cloud, const Tolerances& tol) {
  return distance_to_hull(p, std::span<const Point>(cloud.points()), tol);
}

// conv(V) ⊕ B̄(c, R) = { y : dist(y − c, conv V) ≤ R }, with c and R the sums
// over all balls.
double distance_to_body(const Point& p, const Body& body, const Tolerances& tol) {
  require_same_dim(p.dim(), body.dim(), "distance_to_body");
  const Point shifted = body.balls().empty() ? p : p - body.ball_center_sum();
  const HullProjection proj = project_onto_hull(shifted, body.vertices(), tol);
  const double d = std::max(0.0, proj.distance - body.ball_radius_sum());
  return d <= tol.membership ? 0.0 : d;
}

bool contains(const Body& body, const Point& p, const Tolerances& tol) {
  return distance_to_body(p, body, tol) == 0.0;
}

// ---------------------------------------------------------------- set distances

double support_gap(const Body& a, const Body& b, const DirectionSet& dirs) {
  require_same_dim(a.dim(), b.dim(), "support_gap");
  require_same_dim(a.dim(), dirs.dim(), "support_gap directions");
  if (dirs.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty direction set");
  double gap = 0.0;
  for (const auto& u : dirs.directions()) gap = std::max(gap, std::abs(support(a, u) - support(b, u)));
  return gap;
}

double support_gap(const PointCloud& a, const Body& b, const DirectionSet& dirs) {
  require_same_dim(a.dim(), b.dim(), "support_gap");
  require_same_dim(a.dim(), dirs.dim(), "support_gap directions");
  if (dirs.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty direction set");
  double gap = 0.0;
  for (const auto& u : dirs.directions()) gap = std::max(gap, std::abs(support(a, u) - support(b, u)));
  return gap;
}

double hausdorff(const Body& a, const Body& b, const DirectionSet& dirs) { return support_gap(a, b, dirs); }

namespace {

// Nearest-neighbour distances by a sweep over the first coordinate.
class SortedCloud {
 public:
  explicit SortedCloud(std::span<const Point> pts) : pts_(pts.begin(), pts.end()) {
    std::sort(pts_.begin(), pts_.end(), [](const Point& x, const Point& y) { return x[0] < y[0]; });
  }

  double nearest(const Point& q) const {
    const auto pos = std::lower_bound(pts_.begin(), pts_.end(), q[0],
                                      [](const Point& x, double v) { return x[0] < v; });
    double best = std::numeric_limits<double>::infinity();
    for (auto it = pos; it != pts_.end(); ++it) {
      if ((*it)[0] - q[0] >= best) break;
      best = std::min(best, distance(*it, q));
    }
    for (auto it = pos; it != pts_.begin();) {
      --it;
      if (q[0] - (*it)[0] >= best) break;
      best = std::min(best, distance(*it, q));
    }
    return best;
  }

 private:
  std::vector<Point> pts_;
};

double directed(std::span<const Point> from, std::span<const Point> to) {
  const SortedCloud index(to);
  double worst = 0.0;
  for (const auto& q : from) worst = std::max(worst, index.nearest(q));
  return worst;
}

// sup over the body of the distance to the cloud.
double body_to_cloud(const Body& body, const PointCloud& cloud, const DirectionSet& dirs) {
  const Point c = body.ball_center_sum();
  const double r = body.ball_radius_sum();
  if (body.dim() == 1) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& v : body.vertices()) {
      lo = std::min(lo, v[0]);
      hi = std::max(hi, v[0]);
    }
    lo += c[0] - r;
    hi += c[0] + r;
    std::vector<double> xs;
    for (const auto& p : cloud.points()) xs.push_back(p[0]);
    std::sort(xs.begin(), xs.end());
    auto dist_to_cloud = [&](double y) {
      const auto it = std::lower_bound(xs.begin(), xs.end(), y);
      double best = std::numeric_limits<double>::infinity();
      if (it != xs.end()) best = *it - y;
      if (it != xs.begin()) best = std::min(best, y - *(it - 1));
      return best;
    };
    // The distance to a finite set is piecewise linear; its maximum over
    // [lo, hi] sits at an endpoint or at a midpoint between neighbours.
    double worst = std::max(dist_to_cloud(lo), dist_to_cloud(hi));
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      const double mid = 0.5 * (xs[i] + xs[i + 1]);
      if (mid >= lo && mid <= hi) worst = std::max(worst, dist_to_cloud(mid));
    }
    return worst;
  }
  std::vector<Point> samples;
  Point centroid = Point::zero(body.dim());
  for (const auto& v : body.vertices()) {
    centroid += v;
    samples.push_back(v + c);
  }
  centroid = (1.0 / static_cast<double>(body.vertices().size())) * centroid + c;
  samples.push_back(centroid);
  constexpr int kRadial = 8;
  for (const auto& u : dirs.directions()) {
    const Point* arg = &body.vertices().front();
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : body.vertices()) {
      const double s = dot(v, u);
      if (s > best) {
        best = s;
        arg = &v;
      }
    }
    const Point boundary = *arg + c + (r / norm(u)) * u;
    for (int k = 1; k <= kRadial; ++k) {
      const double t = static_cast<double>(k) / kRadial;
      samples.push_back(centroid + t * (boundary - centroid));
    }
  }
  return directed(samples, cloud.points());
}

}  // namespace

double hausdorff(const PointCloud& a, const PointCloud& b) {
  require_same_dim(a.dim(), b.dim(), "hausdorff");
  return std::max(directed(a.points(), b.points()), directed(b.points(), a.points()));
}

double hausdorff(const PointCloud& a, const Body& b, const DirectionSet& dirs, const Tolerances& tol) {
  require_same_dim(a.dim(), b.dim(), "hausdorff");
  double worst = 0.0;
  for (const auto& p : a.points()) worst = std::max(worst, distance_to_body(p, b, tol));
  return std::max(worst, body_to_cloud(b, a, dirs));
}

double hausdorff(const Body& a, const PointCloud& b, const DirectionSet& dirs, const Tolerances& tol) {
  return hausdorff(b, a, dirs, tol);
}

// ---------------------------------------------------------------- extreme points

std::vector<std::size_t> extreme_indices(std::span<const Point> points, const Tolerances& tol) {
  std::vector<std::size_t> distinct;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](std::size_t j) {
      return approx_equal(points[i], points[j], tol.point_eq);
    });
    if (!seen) distinct.push_back(i);
  }
  if (distinct.size() == 1) return distinct;
  std::vector<std::size_t> out;
  std::vector<Point> others;
  for (std::size_t i : distinct) {
    others.clear();
    for (std::size_t j : distinct) {
      if (j != i) others.push_back(points[j]);
    }
    if (distance_to_hull(points[i], others, tol) > 0.0) out.push_back(i);
  }
  return out;
}

PointCloud extreme_points(const PointCloud& cloud, const Tolerances& tol) {
  std::vector<Point> out;
  for (std::size_t i : extreme_indices(cloud.points(), tol)) out.push_back(cloud[i]);
  return PointCloud(std::move(out));
}

}  // namespace rsl
