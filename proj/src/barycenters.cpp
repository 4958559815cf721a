#include "rsl/barycenters.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rsl/rng.hpp"

namespace rsl {

void validate_probability(std::span<const double> weights, const char* where) {
  if (weights.empty()) throw Error(ErrorCode::NotAProbability, std::string(where) + ": empty support");
  double total = 0.0;
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::NotAProbability, std::string(where) + ": weights must be > 0");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(ErrorCode::NotAProbability, std::string(where) + ": weights sum to " + std::to_string(total));
  }
}

Point barycenter(const DiscreteMeasure<Point>& mu) {
  const std::size_t d = mu.support().front().value.dim();
  Point acc = Point::zero(d);
  for (const auto& a : mu.support()) acc += a.weight * a.value;
  return acc;
}

Selection selection_barycenter(const DiscreteMeasure<Selection>& mu) {
  const Selection& first = mu.support().front().value;
  for (const auto& a : mu.support()) {
    require_same_space(first.space(), a.value.space(), "selection_barycenter");
    require_same_dim(first.dim(), a.value.dim(), "selection_barycenter");
  }
  std::vector<Point> pts;
  for (std::size_t atom = 0; atom < first.atoms(); ++atom) {
    Point acc = Point::zero(first.dim());
    for (const auto& a : mu.support()) acc += a.weight * a.value[atom];
    pts.push_back(std::move(acc));
  }
  return Selection(first.space(), std::move(pts));
}

namespace {

// Random probability vector of length m (normalized exponentials).
std::vector<double> random_simplex(Rng& rng, std::size_t m) {
  std::vector<double> w(m);
  double total = 0.0;
  for (auto& x : w) {
    x = -std::log(1.0 - rng.uniform()) + 1e-12;
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

Point combine(std::span<const Point> pts, std::span<const double> weights) {
  Point acc = Point::zero(pts.front().dim());
  for (std::size_t i = 0; i < pts.size(); ++i) acc += weights[i] * pts[i];
  return acc;
}

template <class Visit>
void simplex_lattice(std::size_t grid, std::size_t parts, Visit&& visit) {
  std::vector<double> w(parts, 0.0);
  std::vector<std::size_t> c(parts, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
    if (pos + 1 == parts) {
      c[pos] = left;
      for (std::size_t i = 0; i < parts; ++i) w[i] = static_cast<double>(c[i]) / static_cast<double>(grid);
      visit(std::span<const double>(w));
      return;
    }
    for (std::size_t v = 0; v <= left; ++v) {
      c[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, grid);
}

}  // namespace

ChoquetReport choquet_hull_fd(const PointCloud& cloud, std::size_t trials, std::uint64_t seed, std::size_t grid,
                              const Tolerances& tol) {
  if (cloud.dim() > 6) throw Error(ErrorCode::InvalidArgument, "choquet_hull_fd supports d <= 6");
  if (grid == 0) throw Error(ErrorCode::InvalidArgument, "lattice grid must be >= 1");
  const auto& pts = cloud.points();
  ChoquetReport report;
  report.trials = trials;

  // Lattice points of conv(cloud), each with its generating weights.
  std::vector<Point> lattice;
  std::vector<std::vector<double>> lattice_weights;
  simplex_lattice(grid, pts.size(), [&](std::span<const double> w) {
    lattice.push_back(combine(pts, w));
    lattice_weights.emplace_back(w.begin(), w.end());
  });
  if (lattice.size() > enumeration_guard()) {
    throw Error(ErrorCode::EnumerationTooLarge, "hull lattice exceeds guard");
  }
  report.lattice_points = lattice.size();

  Rng rng = Rng::derive(seed, "choquet_hull_fd");
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t k = 1 + rng.index(std::min<std::size_t>(lattice.size(), 8));
    std::vector<Weighted<Point>> atoms;
    const auto w = random_simplex(rng, k);
    for (std::size_t i = 0; i < k; ++i) atoms.push_back({w[i], lattice[rng.index(lattice.size())]});
    const Point r = barycenter(DiscreteMeasure<Point>(std::move(atoms)));
    report.max_violation = std::max(report.max_violation, project_onto_hull(r, pts, tol).distance);
  }

  // Converse: recover barycentric weights for each lattice point with the
  // hull projection, then rebuild the point as a barycenter.
  const PointCloud ext = extreme_points(cloud, tol);
  for (const auto& q : lattice) {
    const auto proj = project_onto_hull(q, pts, tol);
    std::vector<Weighted<Point>> atoms;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (proj.weights[i] > 0.0) atoms.push_back({proj.weights[i], pts[i]});
    }
    const Point r = barycenter(DiscreteMeasure<Point>(merge_duplicates(std::move(atoms), 0.0)));
    report.max_recovery_error = std::max(report.max_recovery_error, distance(r, q));

    const auto proj_ext = project_onto_hull(q, ext.points(), tol);
    std::vector<Weighted<Point>> ext_atoms;
    for (std::size_t i = 0; i < ext.size(); ++i) {
      if (proj_ext.weights[i] > 0.0) ext_atoms.push_back({proj_ext.weights[i], ext[i]});
    }
    const Point re = barycenter(DiscreteMeasure<Point>(std::move(ext_atoms)));
    report.max_extreme_recovery_error = std::max(report.max_extreme_recovery_error, distance(re, q));
  }
  report.pass = report.max_violation <= tol.membership && report.max_recovery_error <= tol.membership &&
                report.max_extreme_recovery_error <= tol.membership;
  return report;
}

// ---------------------------------------------------------------- kernels

Kernel::Kernel(FiniteProbSpace space, std::vector<DiscreteMeasure<Point>> rows)
    : space_(std::move(space)), rows_(std::move(rows)) {
  if (rows_.size() != space_.size()) throw Error(ErrorCode::SpaceMismatch, "kernel needs one row per atom");
  const std::size_t d = rows_.front().support().front().value.dim();
  dirac_ = true;
  for (const auto& row : rows_) {
    for (const auto& a : row.support()) require_same_dim(d, a.value.dim(), "kernel rows");
    dirac_ = dirac_ && row.is_dirac();
  }
}

Kernel Kernel::dirac(const Selection& a) {
  std::vector<DiscreteMeasure<Point>> rows;
  for (const auto& p : a.points()) rows.push_back(DiscreteMeasure<Point>::dirac(p));
  return Kernel(a.space(), std::move(rows));
}

Kernel Kernel::decomposition(std::span<const Selection> selections, const Assignment& assignment) {
  return dirac(decompose(selections, assignment));
}

Kernel Kernel::random_convex_combination(std::span<const Selection> selections,
                                         const std::vector<std::vector<double>>& lambdas) {
  if (selections.empty()) throw Error(ErrorCode::InvalidArgument, "no selections");
  const auto& space = selections.front().space();
  if (lambdas.size() != space.size()) throw Error(ErrorCode::SpaceMismatch, "one weight vector per atom");
  std::vector<DiscreteMeasure<Point>> rows;
  for (std::size_t atom = 0; atom < space.size(); ++atom) {
    if (lambdas[atom].size() != selections.size()) {
      throw Error(ErrorCode::InvalidArgument, "weight vector length differs from selection count");
    }
    std::vector<Weighted<Point>> atoms;
    for (std::size_t i = 0; i < selections.size(); ++i) {
      require_same_space(space, selections[i].space(), "random_convex_combination");
      if (lambdas[atom][i] > 0.0) atoms.push_back({lambdas[atom][i], selections[i][atom]});
    }
    rows.emplace_back(std::move(atoms));
  }
  return Kernel(space, std::move(rows));
}

DiscreteMeasure<Point> measure_kernel(std::span<const double> v, const Kernel& k, double tol) {
  if (v.size() != k.space().size()) throw Error(ErrorCode::SpaceMismatch, "measure_kernel weights");
  validate_probability(v, "measure_kernel");
  std::vector<Weighted<Point>> atoms;
  for (std::size_t atom = 0; atom < v.size(); ++atom) {
    for (const auto& a : k[atom].support()) atoms.push_back({v[atom] * a.weight, a.value});
  }
  return DiscreteMeasure<Point>(merge_duplicates(std::move(atoms), tol));
}

Selection kernel_barycenter(const Kernel& k) {
  std::vector<Point> pts;
  pts.reserve(k.rows().size());
  for (const auto& row : k.rows()) pts.push_back(barycenter(row));
  return Selection(k.space(), std::move(pts));
}

Selection kernel_barycenter(const Kernel& k, const SelectionSet& a, const Tolerances& tol) {
  require_same_space(k.space(), a.space(), "kernel_barycenter");
  const SelectionSet chd = chd_hull(a, tol);
  const auto& values = chd.atom_clouds();
  for (std::size_t atom = 0; atom < values.size(); ++atom) {
    for (const auto& s : k[atom].support()) {
      const auto& pts = values[atom].points();
      const bool inside = std::any_of(pts.begin(), pts.end(),
                                      [&](const Point& p) { return approx_equal(p, s.value, tol.point_eq); });
      if (!inside) {
        throw Error(ErrorCode::InvalidArgument,
                    "kernel row " + std::to_string(atom) + " is not supported in F_A");
      }
    }
  }
  Selection result = kernel_barycenter(k);
  const bool ok = k.dirac_flag() ? chd.contains(result, tol) : chcd_hull(a, tol, 0).contains(result, tol);
  if (!ok) throw Error(ErrorCode::NotASelection, "kernel barycenter left the hull");
  return result;
}

}  // namespace rsl
