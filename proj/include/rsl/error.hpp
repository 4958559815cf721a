#pragma once

#include <stdexcept>
#include <string>

namespace rsl {

enum class ErrorCode {
  DimensionMismatch,
  NegativeScale,
  InvalidArgument,
  EnumerationTooLarge,
  NotAProbability,
  NotASelection,
  SpaceMismatch,
  IndexOutOfRange,
};

const char* error_name(ErrorCode code) noexcept;

// All library failures surface as rsl::Error; what() is "<Name>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rsl
