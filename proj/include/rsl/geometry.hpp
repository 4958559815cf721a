#pragma once

// Convex bodies in R^d represented as conv(vertices) + (sum of closed balls),
// together with the support-function calculus, Minkowski operations, hull
// membership via conditional gradient, and extreme-point extraction.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "rsl/tolerances.hpp"

namespace rsl {

class Point {
 public:
  Point() = default;
  // Throws InvalidArgument on an empty list or a non-finite coordinate.
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  static Point zero(std::size_t dim);
  static Point unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }

  Point& operator+=(const Point& other);
  Point& operator-=(const Point& other);
  Point& operator*=(double factor);

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

Point operator+(Point a, const Point& b);
Point operator-(Point a, const Point& b);
Point operator*(double factor, Point p);

double dot(const Point& a, const Point& b);
double norm(const Point& p);
double distance(const Point& a, const Point& b);
// Max-abs coordinate difference ≤ tol.
bool approx_equal(const Point& a, const Point& b, double tol = 1e-12);
// Concatenates coordinates; used to view selections as vectors in R^{n·d}.
Point concat(std::span<const Point> parts);

void require_same_dim(std::size_t a, std::size_t b, const char* where);

struct Ball {
  Point center;
  double radius = 0.0;
};

// conv(vertices) ⊕ B̄(c_1,r_1) ⊕ ... ⊕ B̄(c_k,r_k). Always nonempty and compact.
class Body {
 public:
  explicit Body(std::vector<Point> vertices, std::vector<Ball> balls = {});

  static Body singleton(Point p);
  static Body ball(Point center, double radius);
  static Body segment(Point a, Point b);
  static Body interval(double lo, double hi);

  std::size_t dim() const noexcept { return vertices_.front().dim(); }
  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  const std::vector<Ball>& balls() const noexcept { return balls_; }

  Point ball_center_sum() const;
  double ball_radius_sum() const;

 private:
  std::vector<Point> vertices_;
  std::vector<Ball> balls_;
};

// Finite nonempty point set; may be nonconvex.
class PointCloud {
 public:
  explicit PointCloud(std::vector<Point> points);

  std::size_t dim() const noexcept { return points_.front().dim(); }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

 private:
  std::vector<Point> points_;
};

// Drops points within tol (max-abs) of an earlier point, preserving order.
std::vector<Point> unique_points(std::span<const Point> points, double tol = 1e-12);

// Deterministic unit directions used to compare sets through support functions.
class DirectionSet {
 public:
  enum class Rule { Axis1D, Circle, FibonacciSphere, AxesPlusRandom };

  // d=1: {±1}; d=2: `count` equal angles (default 256); d=3: `count`
  // Fibonacci-sphere points (default 512); d>3: 2d axis directions plus
  // `count` seeded random unit vectors (default 1024).
  static DirectionSet standard(std::size_t dim, std::size_t count = 0, std::uint64_t seed = 0);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return directions_.size(); }
  const std::vector<Point>& directions() const noexcept { return directions_; }
  Rule rule() const noexcept { return rule_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  DirectionSet(std::size_t dim, Rule rule, std::uint64_t seed, std::vector<Point> dirs);

  std::size_t dim_;
  Rule rule_;
  std::uint64_t seed_;
  std::vector<Point> directions_;
};

const char* rule_name(DirectionSet::Rule rule) noexcept;

double support(const Body& body, const Point& u);
double support(const PointCloud& cloud, const Point& u);

Body minkowski_sum(const Body& a, const Body& b);
Body scale(const Body& body, double factor);
// Removes redundant polytope generators; the represented set is unchanged.
Body reduce(const Body& body, const Tolerances& tol = {});
Body convex_hull(const PointCloud& cloud, const Tolerances& tol = {});

struct HullProjection {
  double distance = 0.0;        // ‖nearest − p‖
  Point nearest;
  std::vector<double> weights;  // barycentric coordinates of `nearest`
  double gap = 0.0;             // final duality gap
  int iterations = 0;
  bool converged = false;
};

// Euclidean projection of p onto conv(points): Wolfe's min-norm-point
// method (conditional gradient steps plus exact affine corrections),
// stopped at Wolfe gap ≤ tol.fw_gap.
HullProjection project_onto_hull(const Point& p, std::span<const Point> points,
                                 const Tolerances& tol = {});

// Distance to conv(cloud); reported as exactly 0 once membership within
// tol.membership is certified.
double distance_to_hull(const Point& p, const PointCloud& cloud, const Tolerances& tol = {});
double distance_to_hull(const Point& p, std::span<const Point> points, const Tolerances& tol = {});
double distance_to_body(const Point& p, const Body& body, const Tolerances& tol = {});
bool contains(const Body& body, const Point& p, const Tolerances& tol = {});

// Support pseudo-distance max_u |h_a(u) − h_b(u)| over dirs. Clouds enter
// through their convex hulls. Equals the Hausdorff distance of the convex
// hulls only in the limit of dense directions.
double support_gap(const Body& a, const Body& b, const DirectionSet& dirs);
double support_gap(const PointCloud& a, const Body& b, const DirectionSet& dirs);

double hausdorff(const Body& a, const Body& b, const DirectionSet& dirs);
// Exact discrete Hausdorff distance (double max-min).
double hausdorff(const PointCloud& a, const PointCloud& b);
// Hausdorff distance between a finite set and a convex body. Exact in d=1;
// for d≥2 the body side is evaluated on boundary support points along dirs
// plus radial samples toward the centroid, so it is a lower estimate.
double hausdorff(const PointCloud& a, const Body& b, const DirectionSet& dirs,
                 const Tolerances& tol = {});
double hausdorff(const Body& a, const PointCloud& b, const DirectionSet& dirs,
                 const Tolerances& tol = {});

// Points of the cloud not in the hull of the remaining points (duplicates
// collapsed first). conv(result) = conv(cloud).
PointCloud extreme_points(const PointCloud& cloud, const Tolerances& tol = {});
std::vector<std::size_t> extreme_indices(std::span<const Point> points, const Tolerances& tol = {});

}  // namespace rsl
