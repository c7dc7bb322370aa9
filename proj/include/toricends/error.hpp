#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Numeric values are shared with the C API status codes.
enum class ErrorCode : int {
  invalid_argument = 1,
  parse = 2,
  degenerate_target = 3,
  malformed_path = 4,
  coverage_mismatch = 5,
  illegal_tail = 6,
  incomparable_targets = 7,
  insufficient_blocks = 8,
  validation = 9,
  divergent_net = 10,
  no_realized_point = 11,
  attained_zero_slope = 12,
  mixed_rotativity = 13,
  infinite_block = 14,
  horizon_exceeded = 15,
  no_division_one_torus = 16,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toric
