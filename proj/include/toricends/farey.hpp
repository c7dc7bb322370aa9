#pragma once

#include "toricends/target.hpp"

#include <cstddef>
#include <vector>

namespace toric {

/// True iff x lies on the clockwise arc from `from` to the target. The
/// target endpoint itself counts only when `include_target` is set; an
/// irrational target is never a slope.
bool on_arc_to_target(const Slope& from, const SlopeTarget& target, const Slope& x, bool include_target);

/// The Farey neighbour of `current` on the clockwise arc toward `target`
/// that lies closest to the target. A rational attained target may itself
/// be returned; a non-attained one never is.
///
/// Computed by moving `current` to infinity, where its neighbours are the
/// integers and the arc runs down from +infinity to the image of the target.
Slope next_toward(const Slope& current, const SlopeTarget& target);

/// The minimal clockwise sequence of Farey neighbours from a start slope
/// toward a target. Holds a finite prefix and extends on demand; extension
/// never changes vertices already produced.
class FareyPath {
 public:
  FareyPath(Slope start, SlopeTarget target);

  /// Wraps explicit vertices without checking them (decompose() validates).
  static FareyPath from_vertices(std::vector<Slope> vertices, SlopeTarget target);

  /// Grows the prefix to n vertices, or until an attained target is reached.
  void extend_to(std::size_t n);

  const std::vector<Slope>& vertices() const { return vertices_; }
  const Slope& operator[](std::size_t i) const { return vertices_[i]; }
  std::size_t size() const { return vertices_.size(); }
  const Slope& start() const { return vertices_.front(); }
  const SlopeTarget& target() const { return target_; }

  /// The path has reached its attained target and cannot grow.
  bool terminated() const;
  /// No finite prefix is the whole path (irrational or non-attained target).
  bool infinite() const { return !target_.is_attained(); }

  std::size_t edge_count() const { return vertices_.empty() ? 0 : vertices_.size() - 1; }

  /// Number of leading vertices supplied by from_vertices(); later
  /// vertices come from next_toward().
  std::size_t explicit_count() const { return explicit_count_; }

 private:
  FareyPath(std::vector<Slope> vertices, SlopeTarget target);
  std::vector<Slope> vertices_;
  SlopeTarget target_;
  std::size_t explicit_count_ = 0;
};

/// Path of n vertices (fewer when an attained target comes first).
FareyPath farey_sequence(const Slope& start, const SlopeTarget& target, std::size_t n);

}  // namespace toric
