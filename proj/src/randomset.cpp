#include "rsl/randomset.hpp"

#include <cmath>
#include <string>

#include "rsl/error.hpp"

namespace rsl {

RandomSet::RandomSet(FiniteProbSpace space, std::vector<Body> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size()) {
    throw Error(ErrorCode::SpaceMismatch, "random set needs one body per atom");
  }
  for (const auto& b : values_) require_same_dim(values_.front().dim(), b.dim(), "random set values");
}

RandomCloud::RandomCloud(FiniteProbSpace space, std::vector<PointCloud> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size()) {
    throw Error(ErrorCode::SpaceMismatch, "random cloud needs one cloud per atom");
  }
  for (const auto& c : values_) require_same_dim(values_.front().dim(), c.dim(), "random cloud values");
}

RandomSet RandomCloud::convexified(const Tolerances& tol) const {
  std::vector<Body> bodies;
  bodies.reserve(values_.size());
  for (const auto& c : values_) bodies.push_back(convex_hull(c, tol));
  return RandomSet(space_, std::move(bodies));
}

Selection::Selection(FiniteProbSpace space, std::vector<Point> points)
    : space_(std::move(space)), points_(std::move(points)) {
  if (points_.size() != space_.size()) {
    throw Error(ErrorCode::SpaceMismatch, "selection needs one point per atom");
  }
  for (const auto& p : points_) require_same_dim(points_.front().dim(), p.dim(), "selection points");
}

Selection Selection::checked(const RandomSet& x, std::vector<Point> points, const Tolerances& tol) {
  Selection s(x.space(), std::move(points));
  if (!is_selection(x, s, tol)) throw Error(ErrorCode::NotASelection, "point outside the random set");
  return s;
}

Selection Selection::checked(const RandomCloud& x, std::vector<Point> points, const Tolerances& tol) {
  Selection s(x.space(), std::move(points));
  if (!is_selection(x, s, tol)) throw Error(ErrorCode::NotASelection, "point outside the random cloud");
  return s;
}

Selection Selection::constant(const FiniteProbSpace& space, const Point& value) {
  return Selection(space, std::vector<Point>(space.size(), value));
}

Point Selection::flatten() const { return concat(points_); }

Point Selection::mean() const {
  Point m = Point::zero(dim());
  for (std::size_t i = 0; i < points_.size(); ++i) m += space_.weight(i) * points_[i];
  return m;
}

bool approx_equal(const Selection& a, const Selection& b, double tol) {
  if (a.atoms() != b.atoms()) return false;
  for (std::size_t i = 0; i < a.atoms(); ++i) {
    if (!approx_equal(a[i], b[i], tol)) return false;
  }
  return true;
}

bool is_selection(const RandomSet& x, const Selection& s, const Tolerances& tol) {
  require_same_space(x.space(), s.space(), "is_selection");
  require_same_dim(x.dim(), s.dim(), "is_selection");
  for (std::size_t i = 0; i < s.atoms(); ++i) {
    if (!contains(x[i], s[i], tol)) return false;
  }
  return true;
}

bool is_selection(const RandomCloud& x, const Selection& s, const Tolerances& tol) {
  require_same_space(x.space(), s.space(), "is_selection");
  require_same_dim(x.dim(), s.dim(), "is_selection");
  for (std::size_t i = 0; i < s.atoms(); ++i) {
    bool found = false;
    for (const auto& p : x[i].points()) {
      if (approx_equal(p, s[i], tol.point_eq)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::uint64_t selection_count(const RandomCloud& x) {
  std::uint64_t count = 1;
  for (const auto& c : x.values()) count = saturating_mul(count, c.size());
  return count;
}

std::vector<Selection> enumerate_selections(const RandomCloud& x, std::uint64_t guard) {
  const std::uint64_t count = selection_count(x);
  if (count > guard) {
    throw Error(ErrorCode::EnumerationTooLarge,
                std::to_string(count) + " selections exceed guard " + std::to_string(guard));
  }
  const std::size_t n = x.space().size();
  std::vector<Selection> out;
  out.reserve(count);
  std::vector<std::size_t> idx(n, 0);
  std::vector<Point> pts(n);
  for (std::uint64_t c = 0; c < count; ++c) {
    for (std::size_t i = 0; i < n; ++i) pts[i] = x[i][idx[i]];
    out.emplace_back(x.space(), pts);
    for (std::size_t pos = n; pos-- > 0;) {
      if (++idx[pos] < x[pos].size()) break;
      idx[pos] = 0;
    }
  }
  return out;
}

double lp_norm(const Selection& s, double p) {
  if (!(p >= 1.0)) throw Error(ErrorCode::InvalidArgument, "lp_norm needs p >= 1");
  double acc = 0.0;
  for (std::size_t i = 0; i < s.atoms(); ++i) acc += s.space().weight(i) * std::pow(norm(s[i]), p);
  return std::pow(acc, 1.0 / p);
}

}  // namespace rsl
