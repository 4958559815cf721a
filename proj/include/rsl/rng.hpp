#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "rsl/geometry.hpp"

namespace rsl {

// Seeded generator with portable draws: std::mt19937_64 has a standardized
// output sequence, and every real-valued draw is derived from its raw bits
// here rather than through the implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for (seed, tag); adding new tags never shifts
  // the streams of existing ones.
  static Rng derive(std::uint64_t seed, std::string_view tag);

  std::uint64_t bits() { return engine_(); }
  double uniform();                         // [0,1)
  double uniform(double lo, double hi);
  std::int64_t integer(std::int64_t lo, std::int64_t hi);  // inclusive
  std::size_t index(std::size_t n);         // [0,n)
  double normal();
  Point uniform_point(std::size_t dim, double lo, double hi);
  Point unit_vector(std::size_t dim);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace rsl
