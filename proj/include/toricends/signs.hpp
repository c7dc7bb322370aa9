#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toric {

enum class Sign : std::int8_t { plus = 1, minus = -1 };

inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// A count that may be infinite.
struct ExtCount {
  std::optional<std::uint64_t> value;  // nullopt is infinity

  static ExtCount infinite() { return {}; }
  static ExtCount finite(std::uint64_t v) { return {v}; }
  bool is_infinite() const { return !value.has_value(); }
  std::string str() const { return value ? std::to_string(*value) : "inf"; }

  friend bool operator==(const ExtCount&, const ExtCount&) = default;
};

/// How signs continue past the explicit prefix of an infinite path.
struct TailRule {
  enum class Kind {
    none,          // finite path: the prefix is everything
    all_positive,
    all_negative,
    eventually,    // `after` slices of opposite(sign), then `sign` forever
    alternating,   // +, -, +, -, ...
    periodic,      // pattern repeated
  };

  Kind kind = Kind::none;
  Sign sign = Sign::plus;
  std::size_t after = 0;
  std::vector<Sign> pattern;

  static TailRule none() { return {}; }
  static TailRule all(Sign s) { return {s == Sign::plus ? Kind::all_positive : Kind::all_negative, s, 0, {}}; }
  static TailRule eventually(Sign s, std::size_t after) { return {Kind::eventually, s, after, {}}; }
  static TailRule alternating() { return {Kind::alternating, Sign::plus, 0, {}}; }
  static TailRule periodic(std::vector<Sign> pattern);

  /// Sign of the k-th tail slice (0-based from the end of the prefix).
  Sign at(std::size_t k) const;

  friend bool operator==(const TailRule&, const TailRule&) = default;
};

/// Signs of the basic slices along a path, indexed by edge: slice i lies
/// between vertices i and i+1.
class SignData {
 public:
  SignData() = default;
  SignData(std::vector<Sign> prefix, TailRule tail);

  static SignData finite(std::vector<Sign> signs) { return SignData(std::move(signs), TailRule::none()); }

  const std::vector<Sign>& prefix() const { return prefix_; }
  const TailRule& tail() const { return tail_; }
  bool has_tail() const { return tail_.kind != TailRule::Kind::none; }

  /// Sign of slice i. Throws coverage_mismatch past a finite prefix.
  Sign at(std::size_t i) const;

  /// Number of `s` slices with index >= from (requires a tail for an
  /// exact infinite answer; without one only the prefix counts).
  ExtCount count_from(Sign s, std::size_t from) const;

  /// From this slice index on, at(i) = at(i + period()).
  std::size_t periodic_from() const;
  std::size_t period() const;
  /// Every slice from periodic_from() on carries this sign.
  std::optional<Sign> eventual_constant() const;

  /// Signs of the slices from index k on.
  SignData drop(std::size_t k) const;

  SignData negated() const;

  friend bool operator==(const SignData&, const SignData&) = default;

 private:
  std::vector<Sign> prefix_;
  TailRule tail_;
};

}  // namespace toric
