#pragma once

// Multifunctions over a finite probability space and their selections.

#include <cstdint>
#include <vector>

#include "rsl/geometry.hpp"
#include "rsl/prob.hpp"

namespace rsl {

// Convex-valued multifunction: one Body per atom.
class RandomSet {
 public:
  RandomSet(FiniteProbSpace space, std::vector<Body> values);

  const FiniteProbSpace& space() const noexcept { return space_; }
  const std::vector<Body>& values() const noexcept { return values_; }
  const Body& operator[](std::size_t atom) const { return values_[atom]; }
  std::size_t dim() const noexcept { return values_.front().dim(); }

 private:
  FiniteProbSpace space_;
  std::vector<Body> values_;
};

// Finite-valued (possibly nonconvex) multifunction: one PointCloud per atom.
class RandomCloud {
 public:
  RandomCloud(FiniteProbSpace space, std::vector<PointCloud> values);

  const FiniteProbSpace& space() const noexcept { return space_; }
  const std::vector<PointCloud>& values() const noexcept { return values_; }
  const PointCloud& operator[](std::size_t atom) const { return values_[atom]; }
  std::size_t dim() const noexcept { return values_.front().dim(); }

  // Atom-wise convex hulls.
  RandomSet convexified(const Tolerances& tol = {}) const;

 private:
  FiniteProbSpace space_;
  std::vector<PointCloud> values_;
};

// One point per atom. Selections are plain values; membership in a given
// random set is checked by is_selection / the checked factories.
class Selection {
 public:
  Selection(FiniteProbSpace space, std::vector<Point> points);

  // Throws NotASelection unless points[i] ∈ x(atom_i) for every atom.
  static Selection checked(const RandomSet& x, std::vector<Point> points, const Tolerances& tol = {});
  static Selection checked(const RandomCloud& x, std::vector<Point> points,
                           const Tolerances& tol = {});
  static Selection constant(const FiniteProbSpace& space, const Point& value);

  const FiniteProbSpace& space() const noexcept { return space_; }
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& operator[](std::size_t atom) const { return points_[atom]; }
  std::size_t atoms() const noexcept { return points_.size(); }
  std::size_t dim() const noexcept { return points_.front().dim(); }

  // Vector in R^{n·d}, atoms in order.
  Point flatten() const;
  // Expectation Σ w_i ξ(ω_i).
  Point mean() const;

 private:
  FiniteProbSpace space_;
  std::vector<Point> points_;
};

bool approx_equal(const Selection& a, const Selection& b, double tol = 1e-12);

bool is_selection(const RandomSet& x, const Selection& s, const Tolerances& tol = {});
bool is_selection(const RandomCloud& x, const Selection& s, const Tolerances& tol = {});

// Product of the cloud sizes, saturating.
std::uint64_t selection_count(const RandomCloud& x);

// All selections of a cloud-valued multifunction in lexicographic order
// (atom 0 most significant). Throws EnumerationTooLarge above `guard`.
std::vector<Selection> enumerate_selections(const RandomCloud& x,
                                            std::uint64_t guard = enumeration_guard());

// (Σ_i w_i ‖ξ(ω_i)‖^p)^{1/p}; p ≥ 1.
double lp_norm(const Selection& s, double p);

}  // namespace rsl
