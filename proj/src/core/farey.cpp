#include "toricends/farey.hpp"

#include "toricends/error.hpp"

namespace toric {

bool on_arc_to_target(const Slope& from, const SlopeTarget& target, const Slope& x, bool include_target) {
  if (target.equals_slope(from))
    throw Error(ErrorCode::degenerate_target, "arc from " + from.str() + " to itself");
  if (target.equals_slope(x)) return include_target;
  if (x == from) return true;
  GL2ZMatrix m = to_infinity(from);
  return target.transformed(m).compare(m.apply(x)) > 0;
}

Slope next_toward(const Slope& current, const SlopeTarget& target) {
  if (target.equals_slope(current))
    throw Error(ErrorCode::degenerate_target, "target " + target.describe() + " equals the current slope");
  GL2ZMatrix m = to_infinity(current);
  SlopeTarget image = target.transformed(m);
  // Neighbours of infinity are the integers; take the least one on the arc.
  BigInt n = image.floor() + 1;
  if (image.is_rational() && image.is_attained() && image.slope().den() == 1) n = image.slope().num();
  return m.inverse().apply(Slope(std::move(n), BigInt(1)));
}

FareyPath::FareyPath(Slope start, SlopeTarget target) : FareyPath(std::vector<Slope>{std::move(start)}, std::move(target)) {}

FareyPath::FareyPath(std::vector<Slope> vertices, SlopeTarget target)
    : vertices_(std::move(vertices)), target_(std::move(target)) {
  if (vertices_.empty()) throw Error(ErrorCode::malformed_path, "a path needs a start vertex");
}

FareyPath FareyPath::from_vertices(std::vector<Slope> vertices, SlopeTarget target) {
  FareyPath path(std::move(vertices), std::move(target));
  path.explicit_count_ = path.vertices_.size();
  return path;
}

bool FareyPath::terminated() const { return target_.is_attained() && target_.equals_slope(vertices_.back()); }

void FareyPath::extend_to(std::size_t n) {
  while (vertices_.size() < n && !terminated()) vertices_.push_back(next_toward(vertices_.back(), target_));
}

FareyPath farey_sequence(const Slope& start, const SlopeTarget& target, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "farey_sequence needs n >= 1");
  if (!target.is_attained() && target.equals_slope(start))
    throw Error(ErrorCode::degenerate_target, "non-attained target equals the start slope");
  FareyPath path(start, target);
  path.extend_to(n);
  return path;
}

}  // namespace toric
