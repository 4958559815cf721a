#include "rsl/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace rsl {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::derive(std::uint64_t seed, std::string_view tag) {
  // FNV-1a over the tag, mixed with the seed.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return Rng(splitmix64(seed ^ splitmix64(h)));
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::size_t Rng::index(std::size_t n) {
  // Rejection sampling keeps the draw unbiased and portable.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return static_cast<std::size_t>(r % n);
}

std::int64_t Rng::integer(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(index(static_cast<std::size_t>(hi - lo + 1)));
}

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Point Rng::uniform_point(std::size_t dim, double lo, double hi) {
  std::vector<double> c(dim);
  for (auto& v : c) v = uniform(lo, hi);
  return Point(std::move(c));
}

Point Rng::unit_vector(std::size_t dim) {
  for (;;) {
    std::vector<double> c(dim);
    double n2 = 0.0;
    for (auto& v : c) {
      v = normal();
      n2 += v * v;
    }
    if (n2 < 1e-20) continue;
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& v : c) v *= inv;
    return Point(std::move(c));
  }
}

}  // namespace rsl
