#pragma once

#include "toricends/ends.hpp"

#include <utility>

namespace toric {

/// An open solid torus split along the convex torus of slope s(r).
struct SolidTorusEnd {
  Slope realized_start = Slope(-1);  // s(r), of the form 1/n
  EndDescription end;                // the toric end beyond that torus
  /// Slices of the original description dropped to reach s(r).
  std::size_t dropped_slices = 0;
};

/// T^2 x R cut along a division-1 torus. The minus end is stored reflected
/// into a positive toric end, so its boundary slope is the reflection of
/// the middle slope.
struct OpenToricAnnulus {
  EndDescription plus;
  EndDescription minus;
  TorusRecord middle;

  friend bool operator==(const OpenToricAnnulus&, const OpenToricAnnulus&) = default;
};

/// p/q -> -p/q, the composite of the two reflections identifying the
/// negative half of T^2 x R with a positive toric end.
GL2ZMatrix minus_side_reflection();

/// The 1/n slope (n in Z, 1/0 included) met last before the target along
/// the clockwise arc from the boundary, or nullopt when none is. For the
/// non-attained slope 0 the 1/n points accumulate at the target and the
/// first 1/n vertex of the path is used instead.
std::optional<Slope> last_unit_fraction(const Slope& boundary, const SlopeTarget& target);

/// Meridian-framed description (meridian slope 0). Throws
/// no_realized_point when s(r) is not a torus of the factorization.
SolidTorusEnd solid_torus_factor(const EndDescription& e, const InvariantOptions& options = {});

/// (s(r), classification of the complementary toric end). Throws
/// attained_zero_slope for an attained meridian slope.
std::pair<Slope, EndInvariant> classify_solid_torus(const EndDescription& e, const InvariantOptions& options = {});

/// Moves every rotative layer to the plus side. Throws
/// no_division_one_torus or mixed_rotativity.
OpenToricAnnulus normalize_rotativity(const OpenToricAnnulus& a);

}  // namespace toric
