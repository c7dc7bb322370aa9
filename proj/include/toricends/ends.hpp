#pragma once

#include "toricends/invariants.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toric {

struct TorusRecord {
  Slope slope = Slope(-1);
  std::uint64_t division = 1;
  friend bool operator==(const TorusRecord&, const TorusRecord&) = default;
};

/// Division numbers of the factorization tori.
struct DivisionTail {
  enum class Kind { constant, eventually_constant, strictly_increasing };
  Kind kind = Kind::constant;
  std::vector<std::uint64_t> prefix;  // eventually_constant: the first `after` values
  std::size_t after = 0;
  std::uint64_t value = 1;

  static DivisionTail constant(std::uint64_t v) { return {Kind::constant, {}, 0, v}; }
  static DivisionTail eventually(std::vector<std::uint64_t> prefix, std::uint64_t v) {
    std::size_t n = prefix.size();
    return {Kind::eventually_constant, std::move(prefix), n, v};
  }
  static DivisionTail increasing() { return {Kind::strictly_increasing, {}, 0, 1}; }

  friend bool operator==(const DivisionTail&, const DivisionTail&) = default;
};

/// Full-twist layers at the boundary. `layers` lists the sign of each
/// layer; `infinite` stands for infinitely many layers of `infinite_sign`.
struct RotativeLayers {
  std::vector<Sign> layers;
  bool infinite = false;
  Sign infinite_sign = Sign::plus;

  static RotativeLayers none() { return {}; }
  static RotativeLayers finite(std::size_t n, Sign s) { return {std::vector<Sign>(n, s), false, Sign::plus}; }
  static RotativeLayers infinitely_many(Sign s) { return {{}, true, s}; }

  bool empty() const { return !infinite && layers.empty(); }
  /// nullopt for infinite rotativity.
  std::optional<std::uint64_t> count() const;
  /// Common sign; nullopt when empty or mixed.
  std::optional<Sign> sign() const;
  bool mixed() const;

  friend bool operator==(const RotativeLayers&, const RotativeLayers&) = default;
};

struct EndDescription {
  TorusRecord boundary;
  SlopeTarget target = SlopeTarget::rational(Slope(-1), true);
  SignData signs;
  DivisionTail division_tail;
  RotativeLayers rotative;
  /// Optional explicit factorization slopes, starting at the boundary.
  std::vector<Slope> tori;

  friend bool operator==(const EndDescription&, const EndDescription&) = default;
};

struct Violation {
  std::string invariant;  // short name of the violated condition
  std::string message;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// The change of basis taking the boundary slope to -1 (identity when it
/// already is -1).
GL2ZMatrix boundary_framing(const Slope& boundary);

SlopeTarget slope_at_infinity(const EndDescription& e, const InvariantOptions& options = {});
/// nullopt is infinity.
std::optional<std::uint64_t> division_at_infinity(const EndDescription& e);
bool is_minimally_twisting(const EndDescription& e);

std::vector<Violation> validate(const EndDescription& e);

/// Throws Error(validation) listing every violation.
EndInvariant classify(const EndDescription& e, const InvariantOptions& options = {});

struct ExtensionVerdict {
  enum class Kind { no_tight_extension, extends_by_construction, unknown };
  Kind kind = Kind::unknown;
  std::string reason;
  std::size_t horizon = 0;

  friend bool operator==(const ExtensionVerdict&, const ExtensionVerdict&) = default;
};
const char* verdict_name(ExtensionVerdict::Kind k);

/// Requires a minimally twisting invariant.
ExtensionVerdict extension_obstruction(const EndInvariant& inv, const InvariantOptions& options = {});

struct FamilyOptions {
  InvariantOptions invariant;
  std::size_t max_k = 10000;
};

/// k pairwise inequivalent invariants for ends from -1 toward `target` (in
/// the normalized basis), each certified no_tight_extension.
std::vector<EndInvariant> non_extendable_family(const SlopeTarget& target, std::size_t k,
                                                const FamilyOptions& options = {});

}  // namespace toric
