#include "rsl/error.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "rsl/tolerances.hpp"

namespace rsl {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NegativeScale: return "NegativeScale";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::NotAProbability: return "NotAProbability";
    case ErrorCode::NotASelection: return "NotASelection";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

std::uint64_t enumeration_guard() {
  constexpr std::uint64_t kDefault = 1'000'000;
  const char* env = std::getenv("RSL_GUARD_MAX");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return kDefault;
  return static_cast<std::uint64_t>(v);
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace rsl
