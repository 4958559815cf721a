#pragma once

// Test-only brute-force oracles, independent of the library's conditional
// gradient code path.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "rsl/error.hpp"
#include "rsl/geometry.hpp"

namespace test {

inline double segment_distance(const rsl::Point& p, const rsl::Point& a, const rsl::Point& b) {
  double ab2 = 0.0;
  double t = 0.0;
  for (std::size_t k = 0; k < p.dim(); ++k) {
    ab2 += (b[k] - a[k]) * (b[k] - a[k]);
    t += (p[k] - a[k]) * (b[k] - a[k]);
  }
  t = ab2 > 0.0 ? std::clamp(t / ab2, 0.0, 1.0) : 0.0;
  double s = 0.0;
  for (std::size_t k = 0; k < p.dim(); ++k) {
    const double q = a[k] + t * (b[k] - a[k]) - p[k];
    s += q * q;
  }
  return std::sqrt(s);
}

// p inside the closed triangle abc (planar), non-degenerate triangles only.
inline bool in_triangle(const rsl::Point& p, const rsl::Point& a, const rsl::Point& b, const rsl::Point& c,
                        double slack = 1e-12) {
  const double det = (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]);
  if (std::abs(det) < 1e-14) return false;
  const double l1 = ((p[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (p[1] - a[1])) / det;
  const double l2 = ((b[0] - a[0]) * (p[1] - a[1]) - (p[0] - a[0]) * (b[1] - a[1])) / det;
  return l1 >= -slack && l2 >= -slack && 1.0 - l1 - l2 >= -slack;
}

// Distance to conv(pts) for d ≤ 2: zero inside some triangle (Carathéodory),
// otherwise the nearest point lies on a segment between two generators.
inline double hull_distance_oracle(const rsl::Point& p, const std::vector<rsl::Point>& pts) {
  const std::size_t m = pts.size();
  if (p.dim() == 2) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        for (std::size_t k = j + 1; k < m; ++k)
          if (in_triangle(p, pts[i], pts[j], pts[k], 0.0)) return 0.0;
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    best = std::min(best, rsl::distance(p, pts[i]));
    for (std::size_t j = i + 1; j < m; ++j) best = std::min(best, segment_distance(p, pts[i], pts[j]));
  }
  return best;
}

// Indices (first occurrence of each distinct point) of planar extreme
// points: not inside any triangle or segment of the other distinct points.
inline std::vector<std::size_t> extreme_oracle_2d(const std::vector<rsl::Point>& pts) {
  std::vector<std::size_t> distinct;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool seen = false;
    for (std::size_t j : distinct) seen = seen || rsl::approx_equal(pts[i], pts[j], 1e-12);
    if (!seen) distinct.push_back(i);
  }
  if (distinct.size() == 1) return distinct;
  std::vector<std::size_t> out;
  for (std::size_t i : distinct) {
    std::vector<rsl::Point> others;
    for (std::size_t j : distinct)
      if (j != i) others.push_back(pts[j]);
    bool covered = false;
    const std::size_t m = others.size();
    for (std::size_t a = 0; a < m && !covered; ++a) {
      for (std::size_t b = a + 1; b < m && !covered; ++b) {
        covered = segment_distance(pts[i], others[a], others[b]) <= 1e-12;
        for (std::size_t c = b + 1; c < m && !covered; ++c) covered = in_triangle(pts[i], others[a], others[b], others[c]);
      }
    }
    if (!covered) out.push_back(i);
  }
  return out;
}

// Code of the rsl::Error thrown by f, or nullopt if nothing was thrown.
template <class F>
std::optional<rsl::ErrorCode> thrown_code(F&& f) {
  try {
    f();
  } catch (const rsl::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace test
