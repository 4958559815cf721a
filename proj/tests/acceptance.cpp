// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rsl/barycenters.hpp"
#include "rsl/expectation.hpp"
#include "rsl/hulls.hpp"
#include "rsl/rng.hpp"

using namespace rsl;

namespace {

struct Outcome {
  bool pass = true;
  double dev = 0.0;
  std::string note;

  void observe(bool ok, double d = 0.0) {
    pass = pass && ok;
    if (std::isfinite(d)) dev = std::max(dev, d);
    else pass = false;
  }
};

std::vector<double> random_simplex(Rng& rng, std::size_t n) {
  std::vector<double> w(n);
  double t = 0.0;
  for (auto& x : w) t += (x = 0.1 + rng.uniform());
  for (auto& x : w) x /= t;
  return w;
}

SelectionSet random_selection_set(Rng& rng, std::size_t n, std::size_t m, std::size_t d) {
  const FiniteProbSpace space = uniform_space(n);
  std::vector<Selection> members;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(rng.uniform_point(d, -1.0, 1.0));
    members.emplace_back(space, std::move(pts));
  }
  return SelectionSet::finite(space, std::move(members));
}

RandomCloud random_cloud(Rng& rng, std::size_t n, std::size_t max_m, std::size_t d) {
  std::vector<PointCloud> values;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Point> pts;
    const std::size_t m = 1 + rng.index(max_m);
    for (std::size_t j = 0; j < m; ++j) pts.push_back(rng.uniform_point(d, -1.0, 1.0));
    values.emplace_back(std::move(pts));
  }
  return RandomCloud(uniform_space(n), std::move(values));
}

Selection line_selection(const FiniteProbSpace& s, std::vector<double> xs) {
  std::vector<Point> pts;
  for (double x : xs) pts.push_back(Point{x});
  return Selection(s, std::move(pts));
}

Outcome ball_law() {
  Outcome o;
  Rng rng = Rng::derive(1, "acceptance/ball");
  for (int t = 0; t < 50; ++t) {
    const std::size_t d = 2 + rng.index(2);
    const std::size_t n = 1 + rng.index(5);
    const FiniteProbSpace space(random_simplex(rng, n));
    std::vector<Body> balls;
    Point center = Point::zero(d);
    double radius = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Point phi = rng.uniform_point(d, -3.0, 3.0);
      const double r = rng.uniform(0.1, 2.0);
      balls.push_back(Body::ball(phi, r));
      center += space.weight(i) * phi;
      radius += space.weight(i) * r;
    }
    const auto dirs = DirectionSet::standard(d);
    const auto e = aumann_integral(RandomSet(space, balls), dirs);
    const double gap = support_gap(e.convexified, Body::ball(center, radius), dirs);
    o.observe(gap <= 1e-12, gap);
  }
  o.note = "50 instances";
  return o;
}

Outcome interval_law() {
  Outcome o;
  Rng rng = Rng::derive(1, "acceptance/interval");
  const auto dirs = DirectionSet::standard(1);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng.index(6);
    // rational weights k_i / K
    std::vector<double> w(n);
    double total = 0.0;
    for (auto& x : w) total += (x = double(rng.integer(1, 8)));
    for (auto& x : w) x /= total;
    const FiniteProbSpace space(w);
    std::vector<Body> values;
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double a = rng.integer(-20, 20) / 4.0;
      const double b = a + rng.integer(0, 20) / 4.0;
      values.push_back(Body::interval(a, b));
      lo += space.weight(i) * a;
      hi += space.weight(i) * b;
    }
    const auto e = aumann_integral(RandomSet(space, values), dirs);
    const double dev = std::max(std::abs(support(e.convexified, Point{1.0}) - hi),
                                std::abs(-support(e.convexified, Point{-1.0}) - lo));
    o.observe(dev <= 1e-12, dev);
  }
  o.note = "100 instances";
  return o;
}

Outcome aumann_identity() {
  Outcome o;
  Rng rng = Rng::derive(1, "acceptance/aumann");
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 1 + rng.index(2);
    const auto x = random_cloud(rng, 1 + rng.index(3), 4, d);
    const auto r = aumann_identity_check(x, DirectionSet::standard(d));
    o.observe(r.pass && r.gap <= 1e-9, r.gap);
  }
  o.note = "100 clouds";
  return o;
}

Outcome convexification() {
  Outcome o;
  const std::vector<std::size_t> ns{1, 10, 100, 1000};
  const auto rows = convexification_experiment(ns);
  o.observe(rows.size() == ns.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double dev = std::abs(rows[i].gap - 1.0 / (2.0 * double(ns[i])));
    o.observe(dev <= 1e-12, dev);
  }
  o.note = "n = 1, 10, 100, 1000";
  return o;
}

Outcome hull_algebra() {
  Outcome o;
  Rng rng = Rng::derive(1, "acceptance/hulls");
  std::size_t checks = 0;
  for (int t = 0; t < 100; ++t) {
    const auto a = random_selection_set(rng, 1 + rng.index(3), 1 + rng.index(4), 1 + rng.index(2));
    const auto r = operator_identity_suite(a);
    for (const auto& c : r.checks) {
      o.observe(c.pass && c.max_dev <= 1e-9, c.max_dev);
      ++checks;
    }
  }
  o.note = "100 instances, " + std::to_string(checks) + " identity checks";
  return o;
}

Outcome choquet_equals_conv() {
  Outcome o;
  Rng rng = Rng::derive(1, "acceptance/choquet");
  std::size_t lattice = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t d = 1 + rng.index(3);
    const std::size_t m = 1 + rng.index(6);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < m; ++i) pts.push_back(rng.uniform_point(d, -1.0, 1.0));
    const auto r = choquet_hull_fd(PointCloud(pts), 1000, rng.bits());
    o.observe(r.pass && r.trials == 1000);
    o.observe(r.max_violation <= 1e-8, r.max_violation);
    o.observe(r.max_recovery_error <= 1e-8, r.max_recovery_error);
    lattice += r.lattice_points;
  }
  o.note = "50 clouds x 1000 measures, " + std::to_string(lattice) + " lattice points";
  return o;
}

Outcome kernel_calculus() {
  Outcome o;
  Rng rng = Rng::derive(1, "acceptance/kernel");
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.index(5);
    const std::size_t d = 1 + rng.index(3);
    const FiniteProbSpace space = uniform_space(n);
    std::vector<DiscreteMeasure<Point>> rows;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t k = 1 + rng.index(5);
      const auto w = random_simplex(rng, k);
      std::vector<Weighted<Point>> atoms;
      for (std::size_t a = 0; a < k; ++a) atoms.push_back({w[a], rng.uniform_point(d, -2.0, 2.0)});
      rows.emplace_back(std::move(atoms));
    }
    const Kernel k(space, std::move(rows));
    const auto v = random_simplex(rng, n);
    const Point u = rng.uniform_point(d, -1.0, 1.0);
    auto f = [&](const Point& x) { return dot(u, x); };
    // left side straight from the rows, right side through vK
    double lhs = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double kf = 0.0;
      for (const auto& a : k[i].support()) kf += a.weight * f(a.value);
      lhs += v[i] * kf;
    }
    const auto vk = measure_kernel(v, k, 0.0);
    double rhs = 0.0;
    for (const auto& a : vk.support()) rhs += a.weight * f(a.value);
    o.observe(std::abs(lhs - rhs) <= 1e-12, std::abs(lhs - rhs));

    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(rng.uniform_point(d, -2.0, 2.0));
    const Selection s(space, pts);
    o.observe(kernel_barycenter(Kernel::dirac(s)).points() == s.points());
  }
  o.note = "200 triples, dirac round trip exact";
  return o;
}

Outcome example67() {
  Outcome o;
  std::size_t exhaustive = 0;
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto r = staircase_check(n);
    o.observe(r.atoms == n && r.in_chd && r.min_blocks == n && !r.smaller_found && r.pass);
    if (r.brute_force_run) ++exhaustive;
  }
  o.note = "N = 2..12, labeled brute force for " + std::to_string(exhaustive) + " sizes";
  return o;
}

Outcome example86() {
  Outcome o;
  const auto s = uniform_space(2);
  const Selection f1 = line_selection(s, {0, 5});
  const auto a = SelectionSet::finite(s, {f1, line_selection(s, {1, 1}), line_selection(s, {-1, -1})});
  const auto dec = dec_hull(a);
  o.observe(extreme_selections(a).contains(f1));
  o.observe(!extreme_selections(dec).contains(f1));
  // f1 is the midpoint of two members of the dec hull
  const Selection u = line_selection(s, {1, 5});
  const Selection v = line_selection(s, {-1, 5});
  o.observe(dec.contains(u) && dec.contains(v));

  Rng rng = Rng::derive(1, "acceptance/extreme");
  for (int t = 0; t < 50; ++t) {
    const auto b = random_selection_set(rng, 1 + rng.index(3), 1 + rng.index(4), 1 + rng.index(2));
    const auto ext_dec = extreme_selections(dec_hull(b));
    const auto dec_ext = dec_hull(extreme_selections(b));
    for (const auto& e : ext_dec.members()) o.observe(dec_ext.contains(e));
  }
  o.note = "2-atom model plus 50 random instances";
  return o;
}

Outcome krein_milman() {
  Outcome o;
  Rng rng = Rng::derive(1, "acceptance/krein-milman");
  std::size_t generators = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + rng.index(3);
    const std::size_t m = 1 + rng.index(10);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < m; ++i) pts.push_back(rng.uniform_point(d, -1.0, 1.0));
    const PointCloud cloud(pts);
    const auto ext = extreme_points(cloud);
    double gap = 0.0;
    for (const auto& p : pts) gap = std::max(gap, distance_to_hull(p, ext));
    o.observe(gap <= 1e-9, gap);

    if (d == 2) {
      const auto oracle = test::extreme_oracle_2d(unique_points(pts));
      o.observe(oracle.size() == ext.size());
    }

    // random generator subsets: when conv(B) = conv(A), every extreme point is in B
    for (int k = 0; k < 8; ++k) {
      std::vector<Point> b;
      for (const auto& p : pts)
        if (rng.uniform() < 0.7) b.push_back(p);
      if (b.empty()) continue;
      bool spans = true;
      for (const auto& p : pts) spans = spans && distance_to_hull(p, b) <= 1e-9;
      if (!spans) continue;
      ++generators;
      for (const auto& e : ext.points()) {
        bool found = false;
        for (const auto& q : b) found = found || approx_equal(e, q);
        o.observe(found);
      }
    }
  }
  o.note = "200 clouds, " + std::to_string(generators) + " generator subsets";
  return o;
}

struct Criterion {
  const char* name;
  double budget_ms;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"ball expectation law", 1000, ball_law},
      {"interval law", 1000, interval_law},
      {"aumann identity", 5000, aumann_identity},
      {"convexification rate", 1000, convexification},
      {"hull-operator algebra", 30000, hull_algebra},
      {"ch = conv in R^d", 10000, choquet_equals_conv},
      {"kernel calculus", 1000, kernel_calculus},
      {"staircase truncation", 5000, example67},
      {"extreme points under dec", 5000, example86},
      {"krein-milman / milman", 5000, krein_milman},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool ok = o.pass && ms < c.budget_ms;
    if (!ok) ++failed;
    std::printf("%s  %-26s max_dev=%.3e  %8.1f ms (< %.0f)  %s\n", ok ? "PASS" : "FAIL", c.name, o.dev, ms,
                c.budget_ms, o.note.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
