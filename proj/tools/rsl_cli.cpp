// rsl: expectations, verification suites and experiments for random sets on
// finite probability spaces.
//
//   rsl expect <instance.json> [--dirs N] [--out report.json] [--csv support.csv]
//   rsl verify {hulls|barycenter|kernel|extreme|aumann} [--seed S] [--trials T] [--example 8.6]
//   rsl experiment {convexification|example67|shrink-gap} [--max-n N] [--timing]
//
// Exit codes: 0 ok, 1 a verification failed, 2 malformed input or unknown
// name, 3 enumeration guard exceeded.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rsl/barycenters.hpp"
#include "rsl/error.hpp"
#include "rsl/expectation.hpp"
#include "rsl/hulls.hpp"
#include "rsl/io.hpp"
#include "rsl/rng.hpp"

using nlohmann::json;
using namespace rsl;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kMalformed = 2;
constexpr int kGuard = 3;

struct RunConfig {
  std::uint64_t seed = 1;
  std::size_t dirs = 0;  // 0: the rule's default count
  Tolerances tol;
  std::size_t grid = 0;  // 0: command default
  std::size_t trials = 0;
  std::size_t max_n = 0;
  std::string out;
  std::string csv;
  std::string example;
  bool timing = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json config_json(const RunConfig& c, const std::string& command) {
  return {{"command", command},
          {"seed", c.seed},
          {"dirs", c.dirs},
          {"tol_membership", c.tol.membership},
          {"tol_set_eq", c.tol.set_eq},
          {"grid", c.grid},
          {"trials", c.trials},
          {"guard", enumeration_guard()}};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

// JSON goes to --out when given (with the summary table on stdout),
// otherwise to stdout with the table on stderr.
void emit(const RunConfig& c, const std::string& text, const std::string& table) {
  if (c.out.empty()) {
    std::cout << text;
    std::cerr << table;
  } else {
    write_file(c.out, text);
    std::cout << table;
  }
}

struct Check {
  std::string name;
  bool pass = true;
  double max_dev = 0.0;
};

// Display width of UTF-8 text, counting code points.
std::size_t columns(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
}

std::string render(const std::string& title, const std::vector<Check>& checks) {
  std::size_t width = 4;
  for (const auto& c : checks) width = std::max(width, columns(c.name));
  std::ostringstream os;
  os << title << "\n";
  for (const auto& c : checks) {
    os << "  " << c.name << std::string(width - columns(c.name) + 2, ' ') << (c.pass ? "PASS" : "FAIL") << "  "
       << fmt(c.max_dev) << "\n";
  }
  return os.str();
}

json checks_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"pass", c.pass}, {"max_dev", c.max_dev}});
  return out;
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

// Folds one observation into a named check: worst deviation, pass if all pass.
void merge(std::vector<Check>& checks, const std::string& name, bool pass, double dev) {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
  if (it == checks.end()) {
    checks.push_back({name, pass, dev});
  } else {
    it->pass = it->pass && pass;
    it->max_dev = std::max(it->max_dev, dev);
  }
}

// ---------------------------------------------------------------- random data

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

RandomCloud random_random_cloud(Rng& rng, std::size_t n, std::size_t max_m, std::size_t d) {
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

// Two atoms of weight ½ with f1=(0,5), f2=(1,1), f3=(−1,−1).
SelectionSet example86() {
  const FiniteProbSpace s = uniform_space(2);
  return SelectionSet::finite(s, {line_selection(s, {0, 5}), line_selection(s, {1, 1}), line_selection(s, {-1, -1})});
}

json selection_json(const Selection& s) {
  json out = json::array();
  for (const auto& p : s.points()) out.push_back(io::to_json(p));
  return out;
}

// ---------------------------------------------------------------- expect

std::optional<json> closed_form(const RandomSet& x, const Body& computed, const DirectionSet& dirs) {
  const auto& w = x.space().weights();
  const bool point_like = std::all_of(x.values().begin(), x.values().end(),
                                      [](const Body& b) { return b.vertices().size() == 1; });
  if (point_like) {
    Point center = Point::zero(x.dim());
    double radius = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      center += w[i] * (x[i].vertices().front() + x[i].ball_center_sum());
      radius += w[i] * x[i].ball_radius_sum();
    }
    const Body expected = radius > 0.0 ? Body::ball(center, radius) : Body::singleton(center);
    return json{{"kind", radius > 0.0 ? "ball" : "singleton"},
                {"center", io::to_json(center)},
                {"radius", radius},
                {"support_gap", support_gap(computed, expected, dirs)}};
  }
  const bool intervals = x.dim() == 1 && std::all_of(x.values().begin(), x.values().end(),
                                                     [](const Body& b) { return b.balls().empty(); });
  if (intervals) {
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      lo += w[i] * -support(x[i], Point{-1.0});
      hi += w[i] * support(x[i], Point{1.0});
    }
    return json{{"kind", "interval"},
                {"lo", lo},
                {"hi", hi},
                {"support_gap", support_gap(computed, Body::interval(lo, hi), dirs)}};
  }
  return std::nullopt;
}

int cmd_expect(const RunConfig& c, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read instance " + path);
  json j;
  try {
    j = json::parse(f);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
  const io::Instance inst = io::instance_from_json(j);

  json report{{"schema", io::kSchema}, {"config", config_json(c, "expect")}};
  std::ostringstream csv;
  std::vector<Check> checks;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        const DirectionSet dirs = DirectionSet::standard(x.dim(), c.dirs, c.seed);
        std::string note;
        const ExpectationResult r = [&] {
          if constexpr (std::is_same_v<T, RandomSet>) {
            ExpectationResult e = aumann_integral(x, dirs, c.tol);
            note = selection_expectation(x, c.tol).annotation;
            report["instance"] = "random-set";
            if (auto cf = closed_form(x, e.convexified, dirs)) {
              const double gap = (*cf)["support_gap"].template get<double>();
              checks.push_back({"closed form " + (*cf)["kind"].template get<std::string>(), gap <= 1e-12, gap});
              report["closed_form"] = *cf;
            } else {
              report["closed_form"] = nullptr;
            }
            return e;
          } else {
            ExpectationResult e = aumann_integral_cloud(x, dirs, c.tol);
            note = "closure is the identity on finite probability spaces: finite sets are compact";
            report["instance"] = "random-cloud";
            report["closed_form"] = nullptr;
            report["selections"] = selection_count(x);
            return e;
          }
        }();
        report["direction_rule"] = rule_name(dirs.rule());
        report["result"] = io::to_json(r);
        report["closure_note"] = note;
        checks.push_back({"hausdorff gap to convexified", true, r.hausdorff_gap});

        csv << "index";
        for (std::size_t k = 0; k < x.dim(); ++k) csv << ",u" << k;
        csv << ",h_aumann,h_convexified\n";
        for (std::size_t i = 0; i < dirs.size(); ++i) {
          const Point& u = dirs.directions()[i];
          const double ha = std::visit([&](const auto& a) { return support(a, u); }, r.aumann);
          csv << i;
          for (std::size_t k = 0; k < x.dim(); ++k) csv << "," << fmt(u[k]);
          csv << "," << fmt(ha) << "," << fmt(support(r.convexified, u)) << "\n";
        }
      },
      inst);
  report["checks"] = checks_json(checks);
  report["pass"] = all_pass(checks);

  std::string csv_path = c.csv;
  if (csv_path.empty() && !c.out.empty()) csv_path = c.out + ".support.csv";
  if (!csv_path.empty()) write_file(csv_path, csv.str());
  emit(c, report.dump(2) + "\n", render("expect " + path, checks));
  return all_pass(checks) ? kOk : kFailed;
}

// ---------------------------------------------------------------- verify

int finish_verify(const RunConfig& c, const std::string& suite, std::vector<Check> checks, json details) {
  json report{{"schema", io::kSchema},
              {"config", config_json(c, "verify")},
              {"suite", suite},
              {"pass", all_pass(checks)},
              {"checks", checks_json(checks)},
              {"details", std::move(details)}};
  emit(c, report.dump(2) + "\n", render("verify " + suite, checks));
  return all_pass(checks) ? kOk : kFailed;
}

int verify_hulls(const RunConfig& c) {
  const std::size_t grid = c.grid ? c.grid : 3;
  std::vector<std::pair<std::string, SelectionSet>> instances;
  if (c.example == "8.6") {
    instances.emplace_back("example 8.6", example86());
  } else if (!c.example.empty()) {
    throw UsageError("unknown example " + c.example + " for verify hulls");
  } else {
    Rng rng = Rng::derive(c.seed, "verify/hulls");
    const std::size_t trials = c.trials ? c.trials : 1;
    for (std::size_t t = 0; t < trials; ++t) {
      // the first instance has n=2 atoms, m=3 members, d=2
      const std::size_t n = t == 0 ? 2 : 1 + rng.index(3);
      const std::size_t m = t == 0 ? 3 : 1 + rng.index(4);
      const std::size_t d = t == 0 ? 2 : 1 + rng.index(2);
      instances.emplace_back("instance " + std::to_string(t), random_selection_set(rng, n, m, d));
    }
  }
  std::vector<Check> checks;
  json details = json::array();
  for (const auto& [name, a] : instances) {
    const IdentityReport r = operator_identity_suite(a, grid, c.tol);
    for (const auto& ic : r.checks) merge(checks, ic.identity, ic.pass, ic.max_dev);
    details.push_back({{"instance", name},
                       {"atoms", a.space().size()},
                       {"members", a.members().size()},
                       {"identities", io::to_json(r)}});
  }
  return finish_verify(c, "hulls", std::move(checks), std::move(details));
}

int verify_barycenter(const RunConfig& c) {
  const std::size_t trials = c.trials ? c.trials : 1000;
  const std::size_t grid = c.grid ? c.grid : 4;
  constexpr std::size_t kClouds = 10;
  Rng rng = Rng::derive(c.seed, "verify/barycenter");
  std::vector<Check> checks;
  json details = json::array();
  for (std::size_t t = 0; t < kClouds; ++t) {
    const std::size_t d = 1 + rng.index(3);
    std::vector<Point> pts;
    const std::size_t m = 1 + rng.index(6);
    for (std::size_t i = 0; i < m; ++i) pts.push_back(rng.uniform_point(d, -1.0, 1.0));
    const ChoquetReport r = choquet_hull_fd(PointCloud(pts), trials, rng.bits(), grid, c.tol);
    merge(checks, "barycenters inside conv", r.max_violation <= c.tol.membership, r.max_violation);
    merge(checks, "lattice points are barycenters", r.max_recovery_error <= c.tol.membership, r.max_recovery_error);
    merge(checks, "extreme-point barycenters cover the lattice",
          r.max_extreme_recovery_error <= c.tol.membership, r.max_extreme_recovery_error);
    details.push_back({{"dim", d},
                       {"points", m},
                       {"lattice_points", r.lattice_points},
                       {"max_violation", r.max_violation},
                       {"pass", r.pass}});
  }
  return finish_verify(c, "barycenter", std::move(checks), std::move(details));
}

int verify_kernel(const RunConfig& c) {
  const std::size_t trials = c.trials ? c.trials : 200;
  Rng rng = Rng::derive(c.seed, "verify/kernel");
  double fubini = 0.0;
  bool dirac_exact = true;
  for (std::size_t t = 0; t < trials; ++t) {
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
    const auto vk = measure_kernel(v, k, 0.0);
    const Point u = rng.uniform_point(d, -1.0, 1.0);
    auto f = [&](const Point& x) { return dot(u, x); };
    const auto kf = kernel_apply(k, f);
    double lhs = 0.0;
    for (std::size_t i = 0; i < n; ++i) lhs += v[i] * kf[i];
    double rhs = 0.0;
    for (const auto& a : vk.support()) rhs += a.weight * f(a.value);
    fubini = std::max(fubini, std::abs(lhs - rhs));

    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(rng.uniform_point(d, -2.0, 2.0));
    const Selection a(space, pts);
    dirac_exact = dirac_exact && kernel_barycenter(Kernel::dirac(a)).points() == a.points();
  }
  std::vector<Check> checks{{"v(Kf) = (vK)f", fubini <= 1e-12, fubini},
                            {"dirac round trip", dirac_exact, dirac_exact ? 0.0 : 1.0}};
  return finish_verify(c, "kernel", std::move(checks), json{{"trials", trials}});
}

int verify_extreme(const RunConfig& c) {
  std::vector<Check> checks;
  json details;
  if (c.example == "8.6") {
    const SelectionSet a = example86();
    const FiniteProbSpace& s = a.space();
    const Selection f1 = line_selection(s, {0, 5});
    const SelectionSet dec = dec_hull(a, c.tol);
    const SelectionSet ext_conv = extreme_selections(a, c.tol);
    const SelectionSet ext_dec = extreme_selections(dec, c.tol);
    const Selection u = line_selection(s, {1, 5});
    const Selection v = line_selection(s, {-1, 5});
    const bool split = dec.contains(u, c.tol) && dec.contains(v, c.tol) &&
                       approx_equal(selection_barycenter(DiscreteMeasure<Selection>({{0.5, u}, {0.5, v}})), f1);
    checks.push_back({"f1 extreme in conv{f1,f2,f3}", ext_conv.contains(f1, c.tol), 0.0});
    checks.push_back({"f1 not extreme in dec hull", !ext_dec.contains(f1, c.tol), 0.0});
    checks.push_back({"f1 = 1/2 (1,5) + 1/2 (-1,5) inside dec hull", split, 0.0});
    json ext = json::array();
    for (const auto& e : ext_dec.members()) ext.push_back(selection_json(e));
    details = {{"example", "8.6"}, {"dec_hull_size", dec.members().size()}, {"dec_hull_extreme", ext}};
  } else if (!c.example.empty()) {
    throw UsageError("unknown example " + c.example + " for verify extreme");
  } else {
    const std::size_t trials = c.trials ? c.trials : 50;
    Rng rng = Rng::derive(c.seed, "verify/extreme");
    for (std::size_t t = 0; t < trials; ++t) {
      const SelectionSet a = random_selection_set(rng, 1 + rng.index(3), 1 + rng.index(4), 1 + rng.index(2));
      const SelectionSet dec = dec_hull(a, c.tol);
      const SelectionSet ext_dec = extreme_selections(dec, c.tol);
      const SelectionSet dec_ext = dec_hull(extreme_selections(a, c.tol), c.tol);
      bool inside = true;
      for (const auto& e : ext_dec.members()) inside = inside && dec_ext.contains(e, c.tol);
      merge(checks, "eps(dec A) in dec eps(A)", inside, inside ? 0.0 : 1.0);
      const bool decomposable = is_decomposable(ext_dec, c.tol);
      merge(checks, "eps of a decomposable set is decomposable", decomposable, decomposable ? 0.0 : 1.0);
    }
    details = {{"trials", trials}};
  }
  return finish_verify(c, "extreme", std::move(checks), std::move(details));
}

int verify_aumann(const RunConfig& c) {
  const std::size_t trials = c.trials ? c.trials : 100;
  Rng rng = Rng::derive(c.seed, "verify/aumann");
  std::vector<Check> checks;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t d = 1 + rng.index(2);
    const RandomCloud x = random_random_cloud(rng, 1 + rng.index(3), 4, d);
    const auto r = aumann_identity_check(x, DirectionSet::standard(d, c.dirs, c.seed), c.tol);
    merge(checks, "conv(int X) = int conv X", r.pass, r.gap);
  }
  return finish_verify(c, "aumann", std::move(checks), json{{"trials", trials}});
}

// ---------------------------------------------------------------- experiments

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int finish_experiment(const RunConfig& c, const std::string& csv, bool ok, const std::string& name) {
  if (c.out.empty()) {
    std::cout << csv;
  } else {
    write_file(c.out, csv);
    std::cout << "experiment " << name << ": " << (ok ? "PASS" : "FAIL") << " -> " << c.out << "\n";
  }
  return ok ? kOk : kFailed;
}

int experiment_convexification(const RunConfig& c) {
  const std::size_t max_n = c.max_n ? c.max_n : 1000;
  std::vector<std::size_t> ns;
  for (std::size_t decade = 1; decade <= max_n; decade *= 10) {
    for (std::size_t k : {1, 2, 5}) {
      if (k * decade <= max_n) ns.push_back(k * decade);
    }
  }
  std::ostringstream csv;
  csv << "n,gap,expected,abs_error,runtime_ms\n";
  bool ok = true;
  for (std::size_t n : ns) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::size_t> one{n};
    const auto row = convexification_experiment(one).front();
    const double ms = c.timing ? elapsed_ms(start) : 0.0;
    const double err = std::abs(row.gap - row.expected);
    ok = ok && err <= 1e-12;
    csv << n << "," << fmt(row.gap) << "," << fmt(row.expected) << "," << fmt(err) << "," << fmt(ms) << "\n";
  }
  return finish_experiment(c, csv.str(), ok, "convexification");
}

int experiment_example67(const RunConfig& c) {
  const std::size_t max_n = c.max_n ? c.max_n : 12;
  std::ostringstream csv;
  csv << "N,in_chd,min_blocks,brute_force,smaller_found,pass,runtime_ms\n";
  bool ok = true;
  for (std::size_t n = 2; n <= max_n; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const StaircaseReport r = staircase_check(n, c.tol);
    const double ms = c.timing ? elapsed_ms(start) : 0.0;
    ok = ok && r.pass;
    csv << n << "," << (r.in_chd ? "true" : "false") << "," << r.min_blocks << ","
        << (r.brute_force_run ? "exhaustive" : "skipped") << "," << (r.smaller_found ? "true" : "false") << ","
        << (r.pass ? "true" : "false") << "," << fmt(ms) << "\n";
  }
  return finish_experiment(c, csv.str(), ok, "example67");
}

int experiment_shrink_gap(const RunConfig& c) {
  const std::size_t max_n = c.max_n ? c.max_n : 8;
  const PointCloud cloud({Point{0.0, 0.0}, Point{1.0, 0.0}, Point{0.0, 1.0}, Point{1.0, 1.0}, Point{0.5, 2.0}});
  const DirectionSet dirs = DirectionSet::standard(2, c.dirs, c.seed);
  std::ostringstream csv;
  csv << "n,convex_gap,raw_gap,points,monotone,runtime_ms\n";
  bool ok = true;
  bool monotone = true;
  double last = std::numeric_limits<double>::infinity();
  for (std::size_t n = 1; n <= max_n; n *= 2) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::size_t> one{n};
    const auto rep = deterministic_case_check(cloud, one, dirs, c.tol);
    const double ms = c.timing ? elapsed_ms(start) : 0.0;
    const auto& row = rep.rows.front();
    monotone = monotone && row.raw_gap <= last + c.tol.set_eq;
    last = row.raw_gap;
    ok = ok && rep.convex_pass && monotone;
    csv << n << "," << fmt(row.convex_gap) << "," << fmt(row.raw_gap) << "," << row.points << ","
        << (monotone ? "true" : "false") << "," << fmt(ms) << "\n";
  }
  return finish_experiment(c, csv.str(), ok, "shrink-gap");
}

int run(int argc, char** argv) {
  CLI::App app{"Random sets on finite probability spaces: expectations, hull algebra and experiments", "rsl"};
  app.require_subcommand(1);
  RunConfig c;
  double tol_membership = c.tol.membership;
  double tol_set_eq = c.tol.set_eq;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", c.seed, "seed for all random draws");
    sub->add_option("--dirs", c.dirs, "direction count (0: default for the dimension)");
    sub->add_option("--tol-membership", tol_membership, "membership tolerance");
    sub->add_option("--tol-set-eq", tol_set_eq, "support-gap tolerance for set equality");
    sub->add_option("--grid", c.grid, "simplex lattice resolution");
    sub->add_option("--trials", c.trials, "number of random instances");
    sub->add_option("--out", c.out, "output file (default stdout)");
  };

  std::string instance;
  auto* expect = app.add_subcommand("expect", "Aumann integral of an instance file");
  expect->add_option("instance", instance, "instance JSON")->required();
  expect->add_option("--csv", c.csv, "support-value CSV (default <out>.support.csv)");
  common(expect);

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "hulls | barycenter | kernel | extreme | aumann")->required();
  verify->add_option("--example", c.example, "built-in example (8.6)");
  common(verify);

  std::string name;
  auto* experiment = app.add_subcommand("experiment", "emit an experiment table as CSV");
  experiment->add_option("name", name, "convexification | example67 | shrink-gap")->required();
  experiment->add_option("--max-n", c.max_n, "largest n (or N) in the series");
  experiment->add_flag("--timing", c.timing, "fill runtime_ms (otherwise 0, keeping output byte-stable)");
  common(experiment);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }
  if (!(tol_membership > 0.0) || !(tol_set_eq > 0.0)) throw UsageError("tolerances must be positive");
  if (const char* env = std::getenv("RSL_GUARD_MAX"); env != nullptr && *env != '\0') {
    const std::string v(env);
    if (v.find_first_not_of("0123456789") != std::string::npos || v.find_first_not_of('0') == std::string::npos) {
      throw UsageError("RSL_GUARD_MAX must be a positive integer");
    }
  }
  c.tol.membership = tol_membership;
  c.tol.set_eq = tol_set_eq;

  if (*expect) return cmd_expect(c, instance);
  if (*verify) {
    static const std::map<std::string, std::function<int(const RunConfig&)>> suites{
        {"hulls", verify_hulls},   {"barycenter", verify_barycenter}, {"kernel", verify_kernel},
        {"extreme", verify_extreme}, {"aumann", verify_aumann}};
    const auto it = suites.find(suite);
    if (it == suites.end()) throw UsageError("unknown suite " + suite);
    return it->second(c);
  }
  static const std::map<std::string, std::function<int(const RunConfig&)>> experiments{
      {"convexification", experiment_convexification},
      {"example67", experiment_example67},
      {"shrink-gap", experiment_shrink_gap}};
  const auto it = experiments.find(name);
  if (it == experiments.end()) throw UsageError("unknown experiment " + name);
  return it->second(c);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "rsl: " << e.what() << "\n";
    return kMalformed;
  } catch (const Error& e) {
    std::cerr << "rsl: " << e.what() << "\n";
    return e.code() == ErrorCode::EnumerationTooLarge ? kGuard : kMalformed;
  } catch (const std::exception& e) {
    std::cerr << "rsl: internal error: " << e.what() << "\n";
    return kFailed;
  }
}
