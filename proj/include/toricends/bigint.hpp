#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace toric {

using BigInt = boost::multiprecision::cpp_int;

/// Floor of a / b for b != 0.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

/// Largest r with r * r <= n, for n >= 0.
BigInt isqrt(const BigInt& n);

struct ExtendedGcd {
  BigInt g;  // always >= 0
  BigInt x;
  BigInt y;  // x * a + y * b == g
};
ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b);

BigInt parse_bigint(std::string_view text);
inline std::string to_string(const BigInt& v) { return v.str(); }

inline int sign_of(const BigInt& v) { return v.sign(); }

}  // namespace toric
