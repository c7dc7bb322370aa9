#include "toricends/blocks.hpp"

#include "toricends/error.hpp"

#include <map>
#include <string>

namespace toric {

std::size_t block_slice_count(const Block& b) {
  if (b.infinite) throw Error(ErrorCode::infinite_block, "an infinite block has no finite slice count");
  return b.length() - 1;
}

GL2ZMatrix block_witness(const Slope& first, const Slope& second) {
  const BigInt &p1 = first.num(), &q1 = first.den();
  const BigInt &p2 = second.num(), &q2 = second.den();
  BigInt det_u = p1 * q2 - p2 * q1;
  if (det_u != 1 && det_u != -1)
    throw Error(ErrorCode::malformed_path, first.str() + " and " + second.str() + " are not joined by a Farey edge");
  // M = V diag(1, det U) U^-1 with V = [[-1, -2], [1, 1]] and U = [first | second].
  BigInt v00 = -1, v01 = -2 * det_u, v10 = 1, v11 = det_u;
  BigInt i00 = det_u * q2, i01 = -det_u * p2, i10 = -det_u * q1, i11 = det_u * p1;
  return GL2ZMatrix(v00 * i00 + v01 * i10, v00 * i01 + v01 * i11,
                    v10 * i00 + v11 * i10, v10 * i01 + v11 * i11)
      .normalized();
}

BlockDecomposition::BlockDecomposition(FareyPath path) : path_(std::move(path)) {
  if (path_.size() < 2 && !path_.terminated())
    throw Error(ErrorCode::malformed_path, "decomposition needs at least two vertices");
  validate_explicit_vertices();
  absorb(0);
}

void BlockDecomposition::validate_explicit_vertices() const {
  const auto& v = path_.vertices();
  const SlopeTarget& t = path_.target();
  std::size_t n = std::min(v.size(), path_.explicit_count() + 1);
  if (!t.is_attained() && t.equals_slope(v[0]))
    throw Error(ErrorCode::malformed_path, "path starts at its non-attained target");
  for (std::size_t i = 1; i < n; ++i) {
    if (t.is_attained() && t.equals_slope(v[i - 1]))
      throw Error(ErrorCode::malformed_path, "path continues past its attained target at vertex " + std::to_string(i));
    if (!farey_edge(v[i - 1], v[i]))
      throw Error(ErrorCode::malformed_path, "vertices " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                                 " are not joined by a Farey edge");
    if (!on_arc_to_target(v[i - 1], t, v[i], t.is_attained()))
      throw Error(ErrorCode::malformed_path, "vertex " + std::to_string(i) + " does not move clockwise toward the target");
    for (std::size_t j = 0; j + 1 < i; ++j) {
      if (farey_edge(v[j], v[i]))
        throw Error(ErrorCode::malformed_path, "path is not minimal: vertices " + std::to_string(j) + " and " +
                                                   std::to_string(i) + " are joined by a Farey edge");
    }
  }
}

Block BlockDecomposition::open_block(std::size_t start) const {
  Block b;
  b.start = start;
  b.end = start + 1;
  b.witness = block_witness(path_[start], path_[start + 1]);
  const SlopeTarget& t = path_.target();
  b.infinite = t.is_rational() && !t.is_attained() && b.witness.apply(t.slope()).is_infinite();
  return b;
}

void BlockDecomposition::absorb(std::size_t first_new_vertex) {
  const std::size_t n = path_.size();
  std::size_t v = first_new_vertex;
  if (blocks_.empty()) {
    if (n < 2) return;
    blocks_.push_back(open_block(0));
    v = 2;
  }
  for (; v < n; ++v) {
    Block& last = blocks_.back();
    Slope expected(-static_cast<long long>(v - last.start + 1));
    if (!last.complete && last.witness.apply(path_[v]) == expected) {
      last.end = v;
      continue;
    }
    if (last.infinite)
      throw Error(ErrorCode::malformed_path, "vertex " + std::to_string(v) + " leaves the infinite block");
    last.complete = true;
    std::size_t start = last.end;
    blocks_.push_back(open_block(start));
    blocks_.back().end = v;
  }
  if (path_.terminated() && blocks_.back().end + 1 == n) blocks_.back().complete = true;
}

void BlockDecomposition::extend_path_to(std::size_t n) {
  std::size_t old = path_.size();
  path_.extend_to(n);
  if (path_.size() > old) absorb(old);
}

std::size_t BlockDecomposition::complete_block_count() const {
  std::size_t k = 0;
  for (const Block& b : blocks_) k += b.complete ? 1 : 0;
  return k;
}

void BlockDecomposition::ensure_complete_blocks(std::size_t k, std::size_t max_vertices) {
  while (complete_block_count() < k && !finished()) {
    if (path_.size() >= max_vertices)
      throw Error(ErrorCode::horizon_exceeded, std::to_string(k) + " complete blocks need more than " +
                                                   std::to_string(max_vertices) + " path vertices");
    extend_path_to(path_.size() + 1);
  }
}

void BlockDecomposition::ensure_infinite_block(std::size_t max_vertices) {
  const SlopeTarget& t = path_.target();
  if (!t.is_rational() || t.is_attained())
    throw Error(ErrorCode::invalid_argument, "only non-attained rational targets have an infinite block");
  while (!has_infinite_block()) {
    if (path_.size() >= max_vertices)
      throw Error(ErrorCode::horizon_exceeded, "infinite block not reached within " + std::to_string(max_vertices) + " vertices");
    extend_path_to(path_.size() + 1);
  }
}

BlockDecomposition decompose(const FareyPath& path) { return BlockDecomposition(path); }

std::size_t n_of_r(const Slope& r, const Slope& start, std::size_t max_vertices) {
  if (r == start) throw Error(ErrorCode::degenerate_target, "n(r) needs r different from the start slope");
  BlockDecomposition d(farey_sequence(start, SlopeTarget::rational(r, false), 2));
  d.ensure_infinite_block(max_vertices);
  return d.blocks().size();
}

std::optional<BlockPeriod> find_block_period(BlockDecomposition& d, std::size_t max_blocks) {
  std::optional<QuadraticSurd> value;
  if (d.target().kind() == SlopeTarget::Kind::quadratic) value = d.target().surd();
  else if (d.target().kind() == SlopeTarget::Kind::cf_stream) value = d.target().stream().quadratic_value();
  if (!value) return std::nullopt;
  const QuadraticSurd& t = *value;
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < max_blocks; ++i) {
    d.ensure_complete_blocks(i + 1);
    const Block& b = d.blocks()[i];
    std::string state = t.transformed(b.witness).str();
    auto [it, inserted] = seen.emplace(state, i);
    if (!inserted) {
      BlockPeriod p{it->second, i - it->second, 0};
      const Block& first = d.blocks()[p.from];
      p.slices = b.start - first.start;
      return p;
    }
  }
  return std::nullopt;
}

}  // namespace toric
