#pragma once

#include "oracles.hpp"

#include "toricends/blocks.hpp"
#include "toricends/signs.hpp"

#include <string>
#include <vector>

namespace testing_support {

inline oracle::Frac to_frac(const toric::Slope& s) { return oracle::Frac{s.num(), s.den()}; }

inline toric::Slope to_slope(const oracle::Frac& f) { return toric::Slope(f.p, f.q); }

inline toric::Slope S(const char* text) { return toric::Slope::parse(text); }

inline toric::SlopeTarget rational(const char* text, bool attained) {
  return toric::SlopeTarget::rational(toric::Slope::parse(text), attained);
}

inline toric::SlopeTarget surd(long long a, long long b, long long c, long long d) {
  return toric::SlopeTarget::quadratic(toric::QuadraticSurd::make(a, b, c, d));
}

inline oracle::Target to_oracle(const toric::SlopeTarget& t) {
  if (t.is_rational()) return oracle::rational(to_frac(t.slope()), t.is_attained());
  const auto& q = t.surd();
  oracle::Target o;
  o.rational = false;
  o.a = q.a();
  o.b = q.b();
  o.c = q.c();
  o.d = q.d();
  return o;
}

inline std::vector<toric::Sign> signs_from(const std::string& text) {
  std::vector<toric::Sign> out;
  for (char c : text) out.push_back(c == '+' ? toric::Sign::plus : toric::Sign::minus);
  return out;
}

/// Sign vector from a bitmask, bit i set = slice i positive.
inline std::vector<toric::Sign> signs_from_mask(std::size_t mask, std::size_t n) {
  std::vector<toric::Sign> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(mask >> i & 1 ? toric::Sign::plus : toric::Sign::minus);
  return out;
}

inline const toric::SlopeTarget& minus_sqrt2() {
  static const toric::SlopeTarget t = surd(0, -1, 1, 2);
  return t;
}

}  // namespace testing_support
