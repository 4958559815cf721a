#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "rsl/barycenters.hpp"
#include "rsl/rng.hpp"

using namespace rsl;

namespace {

std::vector<double> random_weights(Rng& rng, std::size_t n) {
  std::vector<double> w(n);
  double t = 0.0;
  for (auto& x : w) {
    x = 0.1 + rng.uniform();
    t += x;
  }
  for (auto& x : w) x /= t;
  return w;
}

DiscreteMeasure<Point> random_measure(Rng& rng, std::size_t d) {
  const std::size_t k = 1 + rng.index(6);
  const auto w = random_weights(rng, k);
  std::vector<Weighted<Point>> atoms;
  for (std::size_t i = 0; i < k; ++i) atoms.push_back({w[i], rng.uniform_point(d, -3.0, 3.0)});
  return DiscreteMeasure<Point>(std::move(atoms));
}

Kernel random_kernel(Rng& rng, const FiniteProbSpace& space, std::size_t d) {
  std::vector<DiscreteMeasure<Point>> rows;
  for (std::size_t i = 0; i < space.size(); ++i) rows.push_back(random_measure(rng, d));
  return Kernel(space, std::move(rows));
}

Selection line_sel(const FiniteProbSpace& s, std::initializer_list<double> xs) {
  std::vector<Point> pts;
  for (double x : xs) pts.push_back(Point{x});
  return Selection(s, std::move(pts));
}

}  // namespace

TEST_CASE("barycenter examples") {
  const Point x{2.0, -1.0};
  CHECK(barycenter(DiscreteMeasure<Point>::dirac(x)) == x);

  const DiscreteMeasure<Point> square({{0.25, Point{0.0, 0.0}},
                                       {0.25, Point{1.0, 0.0}},
                                       {0.25, Point{0.0, 1.0}},
                                       {0.25, Point{1.0, 1.0}}});
  CHECK(barycenter(square) == Point{0.5, 0.5});

  // Σ 2^-n δ_{n e1} over 8 terms, renormalized; the functional ⟨e1,·⟩ summed
  // from the last term backwards gives the same value
  std::vector<Weighted<Point>> atoms;
  double mass = 0.0;
  for (int n = 1; n <= 8; ++n) mass += std::ldexp(1.0, -n);
  for (int n = 1; n <= 8; ++n) atoms.push_back({std::ldexp(1.0, -n) / mass, Point{double(n), 0.0}});
  const DiscreteMeasure<Point> geo(atoms);
  double reverse = 0.0;
  for (int n = 8; n >= 1; --n) reverse += std::ldexp(1.0, -n) / mass * n;
  CHECK(std::abs(barycenter(geo)[0] - reverse) <= 1e-12);
  CHECK(barycenter(geo)[1] == 0.0);
}

TEST_CASE("measures reject bad weights") {
  CHECK(test::thrown_code([] { DiscreteMeasure<Point>({{0.5, Point{0.0}}, {0.4, Point{1.0}}}); }) ==
        ErrorCode::NotAProbability);
  CHECK(test::thrown_code([] { DiscreteMeasure<Point>({{1.0, Point{0.0}}, {0.0, Point{1.0}}}); }) ==
        ErrorCode::NotAProbability);
  CHECK(test::thrown_code([] { DiscreteMeasure<Point>(std::vector<Weighted<Point>>{}); }) ==
        ErrorCode::NotAProbability);
  // within 1e-9 is accepted as is
  CHECK_NOTHROW(DiscreteMeasure<Point>({{0.5, Point{0.0}}, {0.5 + 5e-10, Point{1.0}}}));
}

TEST_CASE("property: barycenter commutes with linear functionals") {
  Rng rng = Rng::derive(21, "barycenter functional");
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 1 + rng.index(4);
    const auto mu = random_measure(rng, d);
    const Point u = rng.uniform_point(d, -1.0, 1.0);
    double direct = 0.0;
    double scale = 0.0;
    for (const auto& a : mu.support()) {
      direct += a.weight * dot(u, a.value);
      scale += a.weight * std::abs(dot(u, a.value));
    }
    CHECK(std::abs(dot(u, barycenter(mu)) - direct) <= 1e-12 * (1.0 + scale));
  }
}

TEST_CASE("choquet hull equals convex hull in the plane") {
  const auto single = choquet_hull_fd(PointCloud({Point{1.0, 2.0}}), 100, 1);
  CHECK(single.pass);
  CHECK(single.max_violation == 0.0);

  const PointCloud tri({Point{0.0, 0.0}, Point{1.0, 0.0}, Point{0.0, 1.0}});
  const auto r = choquet_hull_fd(tri, 1000, 2);
  CHECK(r.pass);
  CHECK(r.max_violation <= 1e-9);
  CHECK(r.lattice_points == 15);
  CHECK(r.max_recovery_error <= 1e-8);
  CHECK(r.max_extreme_recovery_error <= 1e-8);

  // interior generator: weights on extreme points alone still rebuild every lattice point
  const PointCloud with_center({Point{0.0, 0.0}, Point{2.0, 0.0}, Point{0.0, 2.0}, Point{2.0, 2.0}, Point{1.0, 1.0}});
  CHECK(choquet_hull_fd(with_center, 200, 3).pass);
}

TEST_CASE("selection barycenters") {
  const auto s = uniform_space(2);
  const Selection xi = line_sel(s, {1, 3});
  const Selection zeta = line_sel(s, {5, -1});
  CHECK(selection_barycenter(DiscreteMeasure<Selection>::dirac(xi)).points() == xi.points());
  const auto mid = selection_barycenter(DiscreteMeasure<Selection>({{0.5, xi}, {0.5, zeta}}));
  CHECK(mid.points() == line_sel(s, {3, 1}).points());

  // Σ 2^-n δ_{ξ_n} with ξ_n the indicator of atom n gives the staircase
  for (std::size_t n = 2; n <= 10; ++n) {
    const auto g = geometric_space(n);
    std::vector<Weighted<Selection>> atoms;
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Point> pts(n, Point{0.0});
      pts[k] = Point{1.0};
      atoms.push_back({g.weight(k), Selection(g, pts)});
    }
    const Selection r = selection_barycenter(DiscreteMeasure<Selection>(atoms));
    for (std::size_t k = 0; k < n; ++k) CHECK(r[k] == Point{g.weight(k)});
  }
}

TEST_CASE("kernel_apply") {
  const auto s = uniform_space(3);
  const Selection a(s, {Point{1.0, 0.0}, Point{0.0, 2.0}, Point{3.0, 3.0}});
  const Kernel k = Kernel::dirac(a);
  CHECK(k.dirac_flag());
  const auto id = kernel_apply(k, [](const Point& x) { return x; });
  for (std::size_t i = 0; i < 3; ++i) CHECK(id[i] == a[i]);
  const auto c = kernel_apply(k, [](const Point&) { return 7.0; });
  for (double v : c) CHECK(v == 7.0);

  Rng rng = Rng::derive(4, "kernel linear");
  for (int t = 0; t < 50; ++t) {
    const Kernel r = random_kernel(rng, uniform_space(1 + rng.index(4)), 2);
    const Point u = rng.uniform_point(2, -1.0, 1.0);
    const auto f = kernel_apply(r, [&](const Point& x) { return dot(u, x); });
    const Selection bar = kernel_barycenter(r);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(f[i] - dot(u, bar[i])) <= 1e-12);
  }
}

TEST_CASE("measure_kernel") {
  const Kernel one(uniform_space(1), {DiscreteMeasure<Point>({{0.3, Point{1.0}}, {0.7, Point{2.0}}})});
  const auto m1 = measure_kernel(std::vector<double>{1.0}, one);
  REQUIRE(m1.size() == 2);
  CHECK(m1.support()[0].weight == 0.3);
  CHECK(m1.support()[1].value == Point{2.0});

  const auto s = uniform_space(2);
  const Kernel two = Kernel::dirac(line_sel(s, {4, 9}));
  const auto m2 = measure_kernel(s.weights(), two);
  REQUIRE(m2.size() == 2);
  CHECK(m2.support()[0].weight == 0.5);
  CHECK(m2.support()[0].value == Point{4.0});
  CHECK(m2.support()[1].value == Point{9.0});

  // duplicates merge
  const auto m3 = measure_kernel(s.weights(), Kernel::dirac(Selection::constant(s, Point{1.0})));
  CHECK(m3.is_dirac());
  CHECK(test::thrown_code([&] { (void)measure_kernel(std::vector<double>{0.5, 0.6}, two); }) ==
        ErrorCode::NotAProbability);
  CHECK(test::thrown_code([&] { (void)measure_kernel(std::vector<double>{1.0}, two); }) == ErrorCode::SpaceMismatch);
}

TEST_CASE("property: kernel Fubini identity") {
  Rng rng = Rng::derive(1, "kernel fubini");
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.index(5);
    const std::size_t d = 1 + rng.index(3);
    const auto space = uniform_space(n);
    const Kernel k = random_kernel(rng, space, d);
    const auto v = random_weights(rng, n);
    const auto vk = measure_kernel(v, k, 0.0);

    // f = identity, compared coordinate-wise
    const auto kf = kernel_apply(k, [](const Point& x) { return x; });
    Point lhs = Point::zero(d);
    for (std::size_t i = 0; i < n; ++i) lhs += v[i] * kf[i];
    const Point rhs = barycenter(vk);
    CHECK(distance(lhs, rhs) <= 1e-12);

    for (int j = 0; j < 20; ++j) {
      const Point u = rng.uniform_point(d, -1.0, 1.0);
      const double c = rng.uniform(-1.0, 1.0);
      auto f = [&](const Point& x) { return dot(u, x) + c; };
      const auto kfl = kernel_apply(k, f);
      double a = 0.0;
      for (std::size_t i = 0; i < n; ++i) a += v[i] * kfl[i];
      double b = 0.0;
      for (const auto& atom : vk.support()) b += atom.weight * f(atom.value);
      CHECK(std::abs(a - b) <= 1e-12);
    }
  }
}

TEST_CASE("kernel barycenters") {
  Rng rng = Rng::derive(8, "kernel barycenter");
  const auto s = uniform_space(3);
  const Selection a(s, {rng.uniform_point(2, -1, 1), rng.uniform_point(2, -1, 1), rng.uniform_point(2, -1, 1)});
  CHECK(kernel_barycenter(Kernel::dirac(a)).points() == a.points());

  const std::vector<Selection> gens{line_sel(s, {0, 1, 2}), line_sel(s, {5, 6, 7}), line_sel(s, {-1, -2, -3})};
  const Kernel dk = Kernel::decomposition(gens, {2, 0, 1});
  CHECK(dk.dirac_flag());
  CHECK(kernel_barycenter(dk).points() == line_sel(s, {-1, 1, 7}).points());

  const std::vector<std::vector<double>> lambdas{{0.5, 0.5, 0.0}, {0.25, 0.25, 0.5}, {0.0, 0.0, 1.0}};
  const Kernel rk = Kernel::random_convex_combination(gens, lambdas);
  CHECK_FALSE(rk.dirac_flag());
  const Selection r = kernel_barycenter(rk);
  CHECK(r[0] == Point{2.5});
  CHECK(r[1] == Point{0.75});
  CHECK(r[2] == Point{-3.0});

  const auto set = SelectionSet::finite(s, gens);
  CHECK(kernel_barycenter(dk, set).points() == kernel_barycenter(dk).points());
  CHECK(approx_equal(kernel_barycenter(rk, set), r));

  // a row off F_A
  const Kernel off = Kernel::dirac(line_sel(s, {0, 1, 3}));
  CHECK(test::thrown_code([&] { (void)kernel_barycenter(off, set); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("property: Choquet decompositions stay in the hulls") {
  Rng rng = Rng::derive(9, "kernel closure");
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng.index(3);
    const std::size_t m = 1 + rng.index(4);
    const auto space = uniform_space(n);
    std::vector<Selection> gens;
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Point> pts;
      for (std::size_t i = 0; i < n; ++i) pts.push_back(rng.uniform_point(2, -1.0, 1.0));
      gens.emplace_back(space, std::move(pts));
    }
    const auto set = SelectionSet::finite(space, gens);
    Assignment assign(n);
    for (auto& x : assign) x = rng.index(m);
    const Selection dec = kernel_barycenter(Kernel::decomposition(gens, assign), set);
    CHECK(chd_hull(set).contains(dec));

    std::vector<std::vector<double>> lambdas;
    for (std::size_t i = 0; i < n; ++i) lambdas.push_back(random_weights(rng, m));
    const Selection mix = kernel_barycenter(Kernel::random_convex_combination(gens, lambdas), set);
    CHECK(chcd_hull(set).contains(mix));
  }
}

TEST_CASE("pushforward") {
  const DiscreteMeasure<Point> mu({{0.25, Point{0.0}}, {0.75, Point{2.0}}});
  const auto id = pushforward(mu, [](const Point& x) { return x; });
  REQUIRE(id.size() == 2);
  CHECK(id.support()[1].weight == 0.75);
  CHECK(id.support()[1].value == Point{2.0});
  CHECK(pushforward(mu, [](const Point&) { return Point{3.0, 3.0}; }).is_dirac());

  Rng rng = Rng::derive(6, "pushforward");
  for (int t = 0; t < 30; ++t) {
    const auto m = random_measure(rng, 2);
    const Point u = rng.uniform_point(2, -1.0, 1.0);
    auto g = [&](const Point& x) { return Point{dot(u, x), x[0] * x[1]}; };
    Point direct = Point::zero(2);
    for (const auto& a : m.support()) direct += a.weight * g(a.value);
    CHECK(distance(barycenter(pushforward(m, g)), direct) <= 1e-12);
  }
}

TEST_CASE("pushforward through decompose preserves decomposability") {
  // e(a, c) = decompose(a, c, B) pushed from μ × ν has barycenter
  // decompose(r(μ), r(ν), B)
  Rng rng = Rng::derive(12, "decomposability replay");
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + rng.index(3);
    const auto space = uniform_space(n);
    auto random_sel_measure = [&] {
      const std::size_t k = 1 + rng.index(3);
      const auto w = random_weights(rng, k);
      std::vector<Weighted<Selection>> atoms;
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<Point> pts;
        for (std::size_t j = 0; j < n; ++j) pts.push_back(rng.uniform_point(2, -1.0, 1.0));
        atoms.push_back({w[i], Selection(space, std::move(pts))});
      }
      return DiscreteMeasure<Selection>(std::move(atoms));
    };
    const auto mu = random_sel_measure();
    const auto nu = random_sel_measure();
    Assignment block(n);
    for (auto& b : block) b = rng.index(2);

    const auto pushed = pushforward(product_measure(mu, nu), [&](const std::pair<Selection, Selection>& ac) {
      const Selection pair[2] = {ac.first, ac.second};
      return decompose(pair, block);
    });
    const Selection lhs = selection_barycenter(pushed);
    const Selection bars[2] = {selection_barycenter(mu), selection_barycenter(nu)};
    CHECK(approx_equal(lhs, decompose(bars, block), 1e-12));
  }
}
