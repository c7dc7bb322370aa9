#pragma once

#include "toricends/blocks.hpp"
#include "toricends/signs.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace toric {

/// Normal form of the sign counts (f(n, +1), f(n, -1)) on the infinite
/// block of a non-attained rational end.
struct InfiniteBlock {
  enum class Form {
    positive_finite,  // (m, inf)
    negative_finite,  // (inf, m)
    alternating,      // (inf, inf)
  };
  Form form = Form::alternating;
  std::uint64_t m = 0;

  static InfiniteBlock positive(std::uint64_t m) { return {Form::positive_finite, m}; }
  static InfiniteBlock negative(std::uint64_t m) { return {Form::negative_finite, m}; }
  static InfiniteBlock alternating() { return {Form::alternating, 0}; }

  /// Normalizes a count pair; nullopt when both counts are finite.
  static std::optional<InfiniteBlock> from_counts(ExtCount plus, ExtCount minus);
  std::pair<ExtCount, ExtCount> counts() const;

  friend bool operator==(const InfiniteBlock&, const InfiniteBlock&) = default;
};

/// How f continues past its explicit values.
struct EventualRule {
  enum class Kind {
    none,      // known only on the explicit prefix
    maximal,   // f(i) = length(B_i) - 1 for i >= from
    minimal,   // f(i) = 0 for i >= from
    periodic,  // f(i + length) = f(i) for i >= from
  };
  Kind kind = Kind::none;
  std::size_t from = 0;
  std::size_t length = 0;

  friend bool operator==(const EventualRule&, const EventualRule&) = default;
};

/// f over the maximal blocks of an irrational-slope end, 0-based (f[0] is
/// the first block): the number of positive basic slices per block.
struct IrrationalInvariant {
  std::vector<std::uint64_t> f;
  EventualRule eventual;

  /// f(i) when determined; block lengths are needed for maximal rules.
  std::optional<std::uint64_t> value_at(std::size_t i, const std::function<std::uint64_t(std::size_t)>& length) const;

  friend bool operator==(const IrrationalInvariant&, const IrrationalInvariant&) = default;
};

struct RationalNonAttainedInvariant {
  std::vector<std::uint64_t> finite_f;  // blocks 1 .. n-1
  InfiniteBlock infinite_block;

  friend bool operator==(const RationalNonAttainedInvariant&, const RationalNonAttainedInvariant&) = default;
};

struct AttainedInvariant {
  std::vector<std::uint64_t> f;
  std::uint64_t d = 1;  // division number at the attained end

  /// The path has no basic slices (target equals the boundary slope).
  bool vacuous() const { return f.empty(); }

  friend bool operator==(const AttainedInvariant&, const AttainedInvariant&) = default;
};

using MinimalInvariant = std::variant<IrrationalInvariant, RationalNonAttainedInvariant, AttainedInvariant>;

/// Where an invariant was computed: the original boundary torus, the
/// change of basis taking it to slope -1, and the target in the new basis.
struct EndContext {
  Slope boundary = Slope(-1);
  std::uint64_t boundary_division = 1;
  GL2ZMatrix framing = GL2ZMatrix::identity();
  SlopeTarget target = SlopeTarget::rational(Slope(-1), true);

  friend bool operator==(const EndContext&, const EndContext&) = default;
};

struct EndInvariant;

struct MinimallyTwisting {
  MinimalInvariant invariant;
  friend bool operator==(const MinimallyTwisting&, const MinimallyTwisting&) = default;
};

struct NonMinimallyTwisting {
  std::optional<std::uint64_t> rotativity;  // nullopt: infinite
  Sign sign = Sign::plus;
  /// Classification of the end with the rotative layers removed; empty for
  /// infinite rotativity.
  std::shared_ptr<const EndInvariant> residual;
};

/// Nested convex annuli A_i between tori of slope `slope` whose division
/// numbers grow by one; the Legendrian boundary curve on the i-th torus has
/// Thurston-Bennequin number tb_start + i * tb_step.
struct NestedAnnuliDescriptor {
  Slope slope = Slope(-1);
  long long tb_start = -1;
  long long tb_step = -1;
  friend bool operator==(const NestedAnnuliDescriptor&, const NestedAnnuliDescriptor&) = default;
};

struct InfiniteDivision {
  NestedAnnuliDescriptor descriptor;
  friend bool operator==(const InfiniteDivision&, const InfiniteDivision&) = default;
};

struct EndInvariant {
  EndContext context;
  std::variant<MinimallyTwisting, NonMinimallyTwisting, InfiniteDivision> kind;
};

bool operator==(const NonMinimallyTwisting& x, const NonMinimallyTwisting& y);
bool operator==(const EndInvariant& x, const EndInvariant& y);

struct InvariantOptions {
  /// Blocks of f evaluated explicitly for irrational targets.
  std::size_t horizon = 64;
  /// Blocks searched for a repeating block structure.
  std::size_t period_search = 512;
  /// Division number at an attained target.
  std::uint64_t division = 1;
};

/// Per-block positive slice counts, with the infinite block normalized.
/// Throws coverage_mismatch or illegal_tail.
MinimalInvariant invariant_from_signs(BlockDecomposition& decomposition, const SignData& signs,
                                      const InvariantOptions& options = {});

enum class Equivalence { distinct, equivalent, undecided };
const char* equivalence_name(Equivalence e);

/// Field-by-field equality after normalization. Throws incomparable_targets
/// when the contexts differ. Infinite-division ends are never decided.
Equivalence equivalent(const EndInvariant& a, const EndInvariant& b, const InvariantOptions& options = {});

/// f(i, +1) and f(i, -1) for every block of a non-attained rational end.
using RawRationalFunction = std::vector<std::pair<ExtCount, ExtCount>>;

/// Every constraint of the admissible class for the decomposition holds.
bool admissible(const MinimalInvariant& invariant, BlockDecomposition& decomposition);
bool admissible(const RawRationalFunction& f, BlockDecomposition& decomposition);

/// Product of block lengths: the number of distinct invariants on those blocks.
BigInt count_invariants(const std::vector<std::size_t>& lengths);
/// Same, over the first k finite blocks of a decomposition.
BigInt count_invariants(BlockDecomposition& decomposition, std::size_t k);

struct EulerClass {
  BigInt x;
  BigInt y;
  friend bool operator==(const EulerClass&, const EulerClass&) = default;
};

/// Sum over basic slices of sign * (v(s_{i+1}) - v(s_i)) with v(p/q) = (q, p),
/// the vectors lifted so that q_i p_{i+1} - p_i q_{i+1} = -1 on every slice
/// (its value on the clockwise edge from -1 to -2), v(s_0) taken with q >= 0.
/// Infinite paths are truncated to `horizon` slices.
EulerClass euler_class(BlockDecomposition& decomposition, const SignData& signs, std::size_t horizon);

}  // namespace toric
