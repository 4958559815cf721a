#pragma once

#include <cstddef>
#include <cstdint>

namespace rsl {

// Numerical knobs shared by every module. Inputs are assumed O(1) in scale,
// so all tolerances are absolute.
struct Tolerances {
  double membership = 1e-8;   // point-in-set decisions
  double set_eq = 1e-9;       // support-gap set equality
  double fw_gap = 1e-10;      // conditional-gradient duality gap
  int fw_max_iterations = 10000;
  double point_eq = 1e-12;    // duplicate merging of points / selections
};

// Default cap on exhaustive enumerations (selections, dec hulls, lattices).
// The environment variable RSL_GUARD_MAX overrides it when set to a positive
// integer.
std::uint64_t enumeration_guard();

// Cap on labeled partition enumeration (k^n assignments).
inline constexpr std::uint64_t kPartitionGuard = 10'000'000;

// Checked product used by all guards; saturates instead of overflowing.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);

}  // namespace rsl
