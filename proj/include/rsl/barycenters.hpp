#pragma once

// Finitely supported probability measures, their barycenters, transition
// kernels over a finite probability space, and the kernel calculus
// (Kf, vK, pushforward).

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "rsl/error.hpp"
#include "rsl/geometry.hpp"
#include "rsl/hulls.hpp"
#include "rsl/randomset.hpp"

namespace rsl {

// Throws NotAProbability unless every weight is > 0 and |Σw − 1| ≤ 1e-9.
// Weights are never renormalized silently.
void validate_probability(std::span<const double> weights, const char* where);

template <class T>
struct Weighted {
  double weight;
  T value;
};

template <class T>
class DiscreteMeasure {
 public:
  explicit DiscreteMeasure(std::vector<Weighted<T>> support) : support_(std::move(support)) {
    std::vector<double> w;
    w.reserve(support_.size());
    for (const auto& a : support_) w.push_back(a.weight);
    validate_probability(w, "DiscreteMeasure");
  }

  static DiscreteMeasure dirac(T value) { return DiscreteMeasure({Weighted<T>{1.0, std::move(value)}}); }

  const std::vector<Weighted<T>>& support() const noexcept { return support_; }
  std::size_t size() const noexcept { return support_.size(); }
  bool is_dirac() const noexcept { return support_.size() == 1; }

 private:
  std::vector<Weighted<T>> support_;
};

inline bool same_atom(const Point& a, const Point& b, double tol) { return approx_equal(a, b, tol); }
inline bool same_atom(const Selection& a, const Selection& b, double tol) { return approx_equal(a, b, tol); }
inline bool same_atom(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// Sums the weights of support points equal within tol; first occurrence
// order is kept.
template <class T>
std::vector<Weighted<T>> merge_duplicates(std::vector<Weighted<T>> atoms, double tol = 1e-12) {
  std::vector<Weighted<T>> out;
  for (auto& a : atoms) {
    bool merged = false;
    for (auto& o : out) {
      if (same_atom(o.value, a.value, tol)) {
        o.weight += a.weight;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(std::move(a));
  }
  return out;
}

Point barycenter(const DiscreteMeasure<Point>& mu);

// Atom-wise barycenter Σ w_i ξ_i(ω).
Selection selection_barycenter(const DiscreteMeasure<Selection>& mu);

// Image measure g#μ with merged duplicates.
template <class T, class G>
auto pushforward(const DiscreteMeasure<T>& mu, G&& g, double tol = 1e-12)
    -> DiscreteMeasure<std::decay_t<std::invoke_result_t<G&, const T&>>> {
  using Out = std::decay_t<std::invoke_result_t<G&, const T&>>;
  std::vector<Weighted<Out>> atoms;
  atoms.reserve(mu.size());
  for (const auto& a : mu.support()) atoms.push_back(Weighted<Out>{a.weight, std::invoke(g, a.value)});
  return DiscreteMeasure<Out>(merge_duplicates(std::move(atoms), tol));
}

// Product measure μ × ν on pairs.
template <class A, class B>
DiscreteMeasure<std::pair<A, B>> product_measure(const DiscreteMeasure<A>& mu, const DiscreteMeasure<B>& nu) {
  std::vector<Weighted<std::pair<A, B>>> atoms;
  for (const auto& a : mu.support()) {
    for (const auto& b : nu.support()) atoms.push_back({a.weight * b.weight, {a.value, b.value}});
  }
  return DiscreteMeasure<std::pair<A, B>>(std::move(atoms));
}

struct ChoquetReport {
  std::size_t trials = 0;
  double max_violation = 0.0;          // worst distance of a barycenter to conv(cloud)
  std::size_t lattice_points = 0;
  double max_recovery_error = 0.0;     // lattice points rebuilt from recovered weights
  double max_extreme_recovery_error = 0.0;  // same, with weights on extreme points only
  bool pass = false;
};

// Finite-model check that Choquet combinations never leave conv(cloud) and
// that every lattice point of conv(cloud) is a barycenter. Random measures
// are supported on simplex-lattice points (resolution 1/grid) of the hull.
ChoquetReport choquet_hull_fd(const PointCloud& cloud, std::size_t trials, std::uint64_t seed,
                              std::size_t grid = 4, const Tolerances& tol = {});

// Transition kernel: one discrete measure over R^d per atom.
class Kernel {
 public:
  Kernel(FiniteProbSpace space, std::vector<DiscreteMeasure<Point>> rows);

  // K(ω) = δ_{a(ω)}.
  static Kernel dirac(const Selection& a);
  // K(ω) = δ_{ξ_{assignment(ω)}(ω)}: the decomposition along a partition.
  static Kernel decomposition(std::span<const Selection> selections, const Assignment& assignment);
  // K(ω) = Σ_i λ_i(ω) δ_{ξ_i(ω)}; lambdas[ω] is a probability vector.
  static Kernel random_convex_combination(std::span<const Selection> selections,
                                          const std::vector<std::vector<double>>& lambdas);

  const FiniteProbSpace& space() const noexcept { return space_; }
  const std::vector<DiscreteMeasure<Point>>& rows() const noexcept { return rows_; }
  const DiscreteMeasure<Point>& operator[](std::size_t atom) const { return rows_[atom]; }
  std::size_t dim() const noexcept { return rows_.front().support().front().value.dim(); }
  // Structural: every row has a single support point.
  bool dirac_flag() const noexcept { return dirac_; }

 private:
  FiniteProbSpace space_;
  std::vector<DiscreteMeasure<Point>> rows_;
  bool dirac_;
};

// (Kf)(ω) = Σ_{(w,x) ∈ K(ω)} w·f(x), for f returning a Point or a double.
template <class F>
auto kernel_apply(const Kernel& k, F&& f) {
  using R = std::decay_t<std::invoke_result_t<F&, const Point&>>;
  static_assert(std::is_same_v<R, Point> || std::is_same_v<R, double>, "f must return Point or double");
  std::vector<R> out;
  out.reserve(k.rows().size());
  for (const auto& row : k.rows()) {
    if constexpr (std::is_same_v<R, double>) {
      double acc = 0.0;
      for (const auto& a : row.support()) acc += a.weight * std::invoke(f, a.value);
      out.push_back(acc);
    } else {
      Point acc;
      bool first = true;
      for (const auto& a : row.support()) {
        Point term = a.weight * std::invoke(f, a.value);
        if (first) {
          acc = std::move(term);
          first = false;
        } else {
          acc += term;
        }
      }
      out.push_back(std::move(acc));
    }
  }
  return out;
}

// vK = Σ_ω v(ω) K(ω), duplicates merged within tol.
DiscreteMeasure<Point> measure_kernel(std::span<const double> v, const Kernel& k, double tol = 1e-12);

// ω ↦ barycenter(K(ω)).
Selection kernel_barycenter(const Kernel& k);

// Same, after checking that each row is supported in F_A(ω) = {ξ(ω) : ξ ∈ A}
// (throws InvalidArgument otherwise) and that the result lies in chd_hull(A)
// for Dirac kernels (exact) or chcd_hull(A) for general kernels (within
// tol.membership); throws NotASelection if that closure property fails.
Selection kernel_barycenter(const Kernel& k, const SelectionSet& a, const Tolerances& tol = {});

}  // namespace rsl
