#include "toricends/bigint.hpp"

#include "toricends/error.hpp"

#include <cctype>

namespace toric {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::parse: return "parse";
    case ErrorCode::degenerate_target: return "degenerate-target";
    case ErrorCode::malformed_path: return "malformed-path";
    case ErrorCode::coverage_mismatch: return "coverage-mismatch";
    case ErrorCode::illegal_tail: return "illegal-tail";
    case ErrorCode::incomparable_targets: return "incomparable-targets";
    case ErrorCode::insufficient_blocks: return "insufficient-blocks";
    case ErrorCode::validation: return "validation";
    case ErrorCode::divergent_net: return "divergent-net";
    case ErrorCode::no_realized_point: return "no-realized-point";
    case ErrorCode::attained_zero_slope: return "attained-zero-slope";
    case ErrorCode::mixed_rotativity: return "mixed-rotativity";
    case ErrorCode::infinite_block: return "infinite-block";
    case ErrorCode::horizon_exceeded: return "horizon-exceeded";
    case ErrorCode::no_division_one_torus: return "no-division-one-torus";
  }
  return "unknown";
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw Error(ErrorCode::invalid_argument, "division by zero");
  BigInt q = a / b;  // truncates toward zero
  BigInt r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "isqrt of a negative number");
  BigInt r = boost::multiprecision::sqrt(n);
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw Error(ErrorCode::parse, "expected an integer, got '" + std::string(text) + "'");
  BigInt v = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error(ErrorCode::parse, "expected an integer, got '" + std::string(text) + "'");
    v = v * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-v) : v;
}

}  // namespace toric
