#include "rsl/expectation.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "rsl/error.hpp"
#include "rsl/prob.hpp"

namespace rsl {

const char* method_name(ExpectationMethod m) noexcept {
  return m == ExpectationMethod::Minkowski ? "minkowski" : "selection-enum";
}

ExpectationResult aumann_integral(const RandomSet& x, const DirectionSet& dirs, const Tolerances& tol) {
  require_same_dim(x.dim(), dirs.dim(), "aumann_integral directions");
  const auto& w = x.space().weights();
  Body acc = reduce(scale(x[0], w[0]), tol);
  for (std::size_t i = 1; i < w.size(); ++i) acc = reduce(minkowski_sum(acc, scale(x[i], w[i])), tol);
  ExpectationResult r{acc, acc, 0.0, ExpectationMethod::Minkowski, dirs.size()};
  r.hausdorff_gap = support_gap(acc, acc, dirs);
  return r;
}

namespace {

void sort_unique_exact(std::vector<Point>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

std::vector<Point> sorted_unique_tol(std::vector<Point> pts, double tol) {
  pts = unique_points(pts, tol);
  std::sort(pts.begin(), pts.end());
  return pts;
}

// Means of every selection, visited in lexicographic order. Accumulation
// order matches discrete_minkowski_mean so equal means are bit-identical.
std::vector<Point> enumerate_means(const RandomCloud& x) {
  const std::size_t n = x.space().size();
  const auto& w = x.space().weights();
  const std::uint64_t count = selection_count(x);
  std::vector<Point> out;
  out.reserve(count);
  std::vector<std::size_t> idx(n, 0);
  for (std::uint64_t c = 0; c < count; ++c) {
    Point acc = w[0] * x[0][idx[0]];
    for (std::size_t i = 1; i < n; ++i) acc += w[i] * x[i][idx[i]];
    out.push_back(std::move(acc));
    for (std::size_t pos = n; pos-- > 0;) {
      if (++idx[pos] < x[pos].size()) break;
      idx[pos] = 0;
    }
  }
  return out;
}

}  // namespace

PointCloud discrete_minkowski_mean(const RandomCloud& x, const Tolerances& tol) {
  const auto& w = x.space().weights();
  std::vector<Point> acc;
  for (const auto& p : x[0].points()) acc.push_back(w[0] * p);
  sort_unique_exact(acc);
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::vector<Point> next;
    next.reserve(acc.size() * x[i].size());
    for (const auto& a : acc) {
      for (const auto& q : x[i].points()) next.push_back(a + w[i] * q);
    }
    sort_unique_exact(next);
    acc = std::move(next);
  }
  return PointCloud(sorted_unique_tol(std::move(acc), tol.point_eq));
}

ExpectationResult aumann_integral_cloud(const RandomCloud& x, const DirectionSet& dirs, const Tolerances& tol,
                                        std::uint64_t guard) {
  require_same_dim(x.dim(), dirs.dim(), "aumann_integral_cloud directions");
  const std::uint64_t count = selection_count(x);
  if (count > guard) {
    throw Error(ErrorCode::EnumerationTooLarge,
                std::to_string(count) + " selections exceed guard " + std::to_string(guard));
  }
  const auto means = sorted_unique_tol(enumerate_means(x), tol.point_eq);
  const PointCloud minkowski = discrete_minkowski_mean(x, tol);
  bool same = means.size() == minkowski.size();
  for (std::size_t i = 0; same && i < means.size(); ++i) same = approx_equal(means[i], minkowski[i], tol.point_eq);
  if (!same) throw std::logic_error("selection enumeration and Minkowski sum disagree");

  PointCloud cloud(means);
  Body hull = convex_hull(cloud, tol);
  const double gap = hausdorff(cloud, hull, dirs, tol);
  return ExpectationResult{std::move(cloud), std::move(hull), gap, ExpectationMethod::SelectionEnum, dirs.size()};
}

AumannIdentityReport aumann_identity_check(const RandomCloud& x, const DirectionSet& dirs, const Tolerances& tol) {
  const ExpectationResult lhs = aumann_integral_cloud(x, dirs, tol);
  const ExpectationResult rhs = aumann_integral(x.convexified(tol), dirs, tol);
  AumannIdentityReport r;
  r.gap = support_gap(lhs.convexified, rhs.convexified, dirs);
  r.pass = r.gap <= tol.set_eq;
  r.selections = static_cast<std::size_t>(selection_count(x));
  r.direction_count = dirs.size();
  return r;
}

std::vector<ConvexificationRow> convexification_experiment(std::span<const std::size_t> n_list) {
  constexpr std::size_t kMinkowskiLimit = 1024;
  const DirectionSet dirs = DirectionSet::standard(1);
  std::vector<ConvexificationRow> rows;
  for (std::size_t n : n_list) {
    if (n == 0 || n > 1'000'000) throw Error(ErrorCode::InvalidArgument, "convexification needs 1 <= n <= 10^6");
    const auto start = std::chrono::steady_clock::now();
    const FiniteProbSpace space = uniform_space(n);
    double gap = 0.0;
    if (n <= kMinkowskiLimit) {
      const RandomCloud x(space, std::vector<PointCloud>(n, PointCloud({Point{0.0}, Point{1.0}})));
      const PointCloud integral = discrete_minkowski_mean(x);
      const ExpectationResult convex = aumann_integral(x.convexified(), dirs);
      gap = hausdorff(integral, convex.convexified, dirs);
    } else {
      std::vector<Point> grid;
      grid.reserve(n + 1);
      for (std::size_t k = 0; k <= n; ++k) grid.push_back(Point{static_cast<double>(k) / static_cast<double>(n)});
      gap = hausdorff(PointCloud(std::move(grid)), Body::interval(0.0, 1.0), dirs);
    }
    const auto stop = std::chrono::steady_clock::now();
    rows.push_back({n, gap, 0.5 / static_cast<double>(n),
                    std::chrono::duration<double, std::milli>(stop - start).count()});
  }
  return rows;
}

namespace {

bool non_increasing(const std::vector<DeterministicRow>& rows, double tol) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].raw_gap > rows[i - 1].raw_gap + tol) return false;
  }
  return true;
}

}  // namespace

DeterministicReport deterministic_case_check(const Body& b, std::span<const std::size_t> n_list,
                                             const DirectionSet& dirs, const Tolerances& tol) {
  DeterministicReport report;
  report.convex_pass = true;
  for (std::size_t n : n_list) {
    const RandomSet x(uniform_space(n), std::vector<Body>(n, b));
    const ExpectationResult e = aumann_integral(x, dirs, tol);
    const double gap = support_gap(e.convexified, b, dirs);
    report.rows.push_back({n, gap, gap, e.convexified.vertices().size()});
    report.convex_pass = report.convex_pass && gap <= tol.set_eq;
  }
  report.monotone = non_increasing(report.rows, tol.set_eq);
  return report;
}

DeterministicReport deterministic_case_check(const PointCloud& b, std::span<const std::size_t> n_list,
                                             const DirectionSet& dirs, const Tolerances& tol) {
  DeterministicReport report;
  report.convex_pass = true;
  const Body target = convex_hull(b, tol);
  for (std::size_t n : n_list) {
    const RandomCloud x(uniform_space(n), std::vector<PointCloud>(n, b));
    const PointCloud integral = selection_count(x) <= enumeration_guard()
                                    ? std::get<PointCloud>(aumann_integral_cloud(x, dirs, tol).aumann)
                                    : discrete_minkowski_mean(x, tol);
    const double convex_gap = support_gap(integral, target, dirs);
    const double raw_gap = hausdorff(integral, target, dirs, tol);
    report.rows.push_back({n, convex_gap, raw_gap, integral.size()});
    report.convex_pass = report.convex_pass && convex_gap <= tol.set_eq;
  }
  report.monotone = non_increasing(report.rows, tol.set_eq);
  return report;
}

namespace {
constexpr const char* kClosureNote =
    "closure is the identity on finite probability spaces: finite Minkowski sums of compact sets are compact";
}

SelectionExpectation selection_expectation(const RandomSet& x, const Tolerances& tol) {
  const auto dirs = DirectionSet::standard(x.dim());
  return {aumann_integral(x, dirs, tol).convexified, kClosureNote};
}

SelectionExpectation selection_expectation(const RandomCloud& x, const Tolerances& tol, std::uint64_t guard) {
  const auto dirs = DirectionSet::standard(x.dim());
  return {std::get<PointCloud>(aumann_integral_cloud(x, dirs, tol, guard).aumann), kClosureNote};
}

}  // namespace rsl
