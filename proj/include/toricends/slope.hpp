#pragma once

#include "toricends/bigint.hpp"

#include <array>
#include <string>
#include <string_view>

namespace toric {

/// An extended rational p/q in lowest terms with q >= 0. Infinity is 1/0.
///
/// Slopes sit on the boundary circle of the Farey disk. "Clockwise" means
/// numerically decreasing: -1, -2, -3, ... runs clockwise toward infinity,
/// and past infinity the walk continues down from the large positive
/// rationals.
class Slope {
 public:
  Slope(BigInt p, BigInt q);
  explicit Slope(long long n) : p_(n), q_(1) {}

  static Slope infinity() { return Slope(BigInt(1), BigInt(0)); }

  /// Accepts "p/q", "p" or "inf".
  static Slope parse(std::string_view text);

  const BigInt& num() const { return p_; }
  const BigInt& den() const { return q_; }
  bool is_infinite() const { return q_ == 0; }

  /// "p/q", with "1/0" for infinity.
  std::string str() const;

  /// Nearest double, for diagnostics only.
  double approx() const;

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  BigInt p_;
  BigInt q_;
};

/// Order of finite slopes on the real line. Both arguments must be finite.
int compare_finite(const Slope& a, const Slope& b);

/// Integer matrix [[a, b], [c, d]] with determinant +1 or -1, acting on
/// slopes by p/q -> (ap + bq)/(cp + dq).
class GL2ZMatrix {
 public:
  GL2ZMatrix(BigInt a, BigInt b, BigInt c, BigInt d);

  static GL2ZMatrix identity() { return GL2ZMatrix(1, 0, 0, 1); }

  const BigInt& a() const { return m_[0]; }
  const BigInt& b() const { return m_[1]; }
  const BigInt& c() const { return m_[2]; }
  const BigInt& d() const { return m_[3]; }
  const std::array<BigInt, 4>& entries() const { return m_; }

  int det() const;
  Slope apply(const Slope& s) const;
  GL2ZMatrix inverse() const;

  /// Same projective action, sign chosen so the first nonzero of (a, b) is positive.
  GL2ZMatrix normalized() const;

  friend GL2ZMatrix operator*(const GL2ZMatrix& x, const GL2ZMatrix& y);
  friend bool operator==(const GL2ZMatrix&, const GL2ZMatrix&) = default;

 private:
  std::array<BigInt, 4> m_;
};

/// True iff |p_a q_b - p_b q_a| = 1.
bool farey_edge(const Slope& a, const Slope& b);

/// A determinant-one matrix sending s to infinity. Orientation preserving,
/// so it carries clockwise arcs from s to arcs running down from +infinity.
GL2ZMatrix to_infinity(const Slope& s);

/// True iff x lies on the closed clockwise arc from a to b. Requires a != b.
bool clockwise_between(const Slope& a, const Slope& b, const Slope& x);

}  // namespace toric
