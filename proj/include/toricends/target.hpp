#pragma once

#include "toricends/slope.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace toric {

/// The real number (a + b sqrt(d)) / c with d > 1 squarefree, b != 0 and
/// c > 0, kept in lowest terms so that equal values have equal fields.
class QuadraticSurd {
 public:
  static QuadraticSurd make(BigInt a, BigInt b, BigInt c, BigInt d);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }

  /// Value under the Moebius action of m.
  QuadraticSurd transformed(const GL2ZMatrix& m) const;
  QuadraticSurd transformed(const std::array<BigInt, 4>& h) const;

  BigInt floor() const;
  /// Sign of (x - value) for finite x.
  int compare(const Slope& x) const;
  double approx() const;
  std::string str() const;

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

 private:
  QuadraticSurd() = default;
  BigInt a_, b_, c_, d_;
};

/// Irrational number given by continued-fraction coefficients
/// [a0; a1, a2, ...] with a_k >= 1 for k >= 1, viewed through an integer
/// homography (A x + B) / (C x + D). Floors are computed by consuming
/// coefficients until the homography's image interval fixes them.
class CfStream {
 public:
  using Generator = std::function<BigInt(std::size_t)>;

  /// Eventually periodic expansion; the period must be nonempty.
  static CfStream periodic(std::vector<BigInt> prefix, std::vector<BigInt> period);
  /// `key` identifies the stream for equality tests.
  static CfStream from_generator(std::string key, Generator coefficients);

  const std::string& key() const { return key_; }
  /// Prefix/period when built by periodic(), for serialization.
  const std::optional<std::pair<std::vector<BigInt>, std::vector<BigInt>>>& periodic_form() const {
    return periodic_;
  }
  const std::array<BigInt, 4>& homography() const { return h_; }

  BigInt coefficient(std::size_t k) const;

  CfStream transformed(const GL2ZMatrix& m) const;
  /// Composes with an arbitrary nonsingular integer homography.
  CfStream transformed(const std::array<BigInt, 4>& h) const;

  BigInt floor() const;
  int compare(const Slope& x) const;
  double approx() const;

  /// Closed form of a periodic() stream; nullopt for generator streams.
  std::optional<QuadraticSurd> quadratic_value() const;

  /// Coefficients consumed before giving up on a floor.
  static constexpr std::size_t kMaxTerms = 100000;

  friend bool operator==(const CfStream& x, const CfStream& y) {
    return x.key_ == y.key_ && x.h_ == y.h_;
  }

 private:
  CfStream() = default;
  std::string key_;
  std::shared_ptr<const Generator> gen_;
  std::optional<std::pair<std::vector<BigInt>, std::vector<BigInt>>> periodic_;
  std::array<BigInt, 4> h_{BigInt(1), BigInt(0), BigInt(0), BigInt(1)};
};

/// The limit slope of an end: a rational (with attainment flag), a
/// quadratic surd, or a continued-fraction stream.
class SlopeTarget {
 public:
  enum class Kind { rational, quadratic, cf_stream };

  static SlopeTarget rational(Slope s, bool attained);
  static SlopeTarget quadratic(QuadraticSurd q);
  static SlopeTarget cf_stream(CfStream cf);

  Kind kind() const;
  bool is_rational() const { return kind() == Kind::rational; }
  bool is_irrational() const { return !is_rational(); }
  bool is_attained() const;
  /// Requires is_rational().
  const Slope& slope() const;
  const QuadraticSurd& surd() const;
  const CfStream& stream() const;

  /// Value of the target under m (attainment is kept).
  SlopeTarget transformed(const GL2ZMatrix& m) const;
  /// Same rational slope with the attainment flag replaced.
  SlopeTarget with_attained(bool attained) const;

  /// True iff the target is the rational slope s (attained or not).
  bool equals_slope(const Slope& s) const;

  /// Sign of (x - target) for finite x and finite target; 0 only for a
  /// rational target equal to x.
  int compare(const Slope& x) const;
  /// Floor of a finite target.
  BigInt floor() const;
  double approx() const;
  std::string describe() const;

  friend bool operator==(const SlopeTarget&, const SlopeTarget&) = default;

 private:
  struct Rational {
    Slope slope;
    bool attained;
    friend bool operator==(const Rational&, const Rational&) = default;
  };
  explicit SlopeTarget(std::variant<Rational, QuadraticSurd, CfStream> v) : v_(std::move(v)) {}
  std::variant<Rational, QuadraticSurd, CfStream> v_;
};

}  // namespace toric
