#pragma once

// Aumann integrals and selection expectations on finite probability spaces,
// plus the convexification experiments built on them.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rsl/geometry.hpp"
#include "rsl/randomset.hpp"

namespace rsl {

enum class ExpectationMethod { Minkowski, SelectionEnum };

const char* method_name(ExpectationMethod m) noexcept;

struct ExpectationResult {
  std::variant<Body, PointCloud> aumann;
  Body convexified;
  double hausdorff_gap = 0.0;  // between aumann and convexified
  ExpectationMethod method = ExpectationMethod::Minkowski;
  std::size_t direction_count = 0;
};

// ∫X dP = ⊕_i w_i X(ω_i) for convex-valued X (closed, so equal to E X).
ExpectationResult aumann_integral(const RandomSet& x, const DirectionSet& dirs, const Tolerances& tol = {});

// {Σ_i w_i s(ω_i) : s a selection} by exhaustive enumeration, cross-checked
// against the discrete Minkowski sum of the scaled clouds (exact match
// required; std::logic_error otherwise).
ExpectationResult aumann_integral_cloud(const RandomCloud& x, const DirectionSet& dirs,
                                        const Tolerances& tol = {},
                                        std::uint64_t guard = enumeration_guard());

// The Minkowski route on its own: ((w_1 X_1 ⊕ w_2 X_2) ⊕ ...) merging only
// bit-identical points between steps, then merging within tol.point_eq.
PointCloud discrete_minkowski_mean(const RandomCloud& x, const Tolerances& tol = {});

struct AumannIdentityReport {
  double gap = 0.0;
  bool pass = false;
  std::size_t selections = 0;
  std::size_t direction_count = 0;
};

// conv(∫X dP) against ∫conv X dP on the support directions.
AumannIdentityReport aumann_identity_check(const RandomCloud& x, const DirectionSet& dirs,
                                           const Tolerances& tol = {});

struct ConvexificationRow {
  std::size_t n = 0;
  double gap = 0.0;
  double expected = 0.0;  // 1/(2n)
  double runtime_ms = 0.0;
};

// X ≡ {0,1} ⊂ R on uniform_space(n): gap between ∫X dP = {k/n} and [0,1].
// n ≤ 1024 goes through the discrete Minkowski route; larger n use the
// closed form {k/n}. n ≤ 10^6.
std::vector<ConvexificationRow> convexification_experiment(std::span<const std::size_t> n_list);

struct DeterministicRow {
  std::size_t n = 0;
  double convex_gap = 0.0;  // support gap conv(∫X dP) vs conv(b)
  double raw_gap = 0.0;     // Hausdorff gap ∫X dP vs conv(b)
  std::size_t points = 0;
};

struct DeterministicReport {
  std::vector<DeterministicRow> rows;
  bool convex_pass = false;
  bool monotone = false;  // raw_gap non-increasing along the given n order
};

// Constant multifunction X ≡ b on uniform_space(n) for each n.
DeterministicReport deterministic_case_check(const Body& b, std::span<const std::size_t> n_list,
                                             const DirectionSet& dirs, const Tolerances& tol = {});
DeterministicReport deterministic_case_check(const PointCloud& b, std::span<const std::size_t> n_list,
                                             const DirectionSet& dirs, const Tolerances& tol = {});

struct SelectionExpectation {
  std::variant<Body, PointCloud> value;
  std::string annotation;
};

// E X = cl ∫X dP. Closure is the identity here (finite sums of compact sets
// are compact); the annotation says so.
SelectionExpectation selection_expectation(const RandomSet& x, const Tolerances& tol = {});
SelectionExpectation selection_expectation(const RandomCloud& x, const Tolerances& tol = {},
                                           std::uint64_t guard = enumeration_guard());

}  // namespace rsl
