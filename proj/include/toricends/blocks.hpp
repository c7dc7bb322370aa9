#pragma once

#include "toricends/farey.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace toric {

/// A maximal run of path vertices start..end (inclusive) that the witness
/// carries to -1, -2, ..., -length. Adjacent blocks share one vertex, so a
/// block owns the basic slices (edges) start..end-1.
struct Block {
  std::size_t start = 0;
  std::size_t end = 0;
  GL2ZMatrix witness = GL2ZMatrix::identity();
  /// Terminal block of a non-attained rational path: the witness sends the
  /// target to infinity and the run continues forever.
  bool infinite = false;
  /// A later vertex (or the attained target) closes the block.
  bool complete = false;

  std::size_t length() const { return end - start + 1; }
};

/// Basic slices in a finite block, length - 1.
std::size_t block_slice_count(const Block& b);

/// The determinant-one matrix sending the edge (first, second) to (-1, -2),
/// sign-normalized. Requires farey_edge(first, second).
GL2ZMatrix block_witness(const Slope& first, const Slope& second);

/// Greedy maximal block decomposition of a FareyPath. Blocks are emitted
/// lazily as the path grows; complete blocks never change.
class BlockDecomposition {
 public:
  /// Validates the path (edges, clockwise progress, minimality) and
  /// decomposes it. Throws malformed_path.
  explicit BlockDecomposition(FareyPath path);

  const FareyPath& path() const { return path_; }
  const SlopeTarget& target() const { return path_.target(); }
  const std::vector<Block>& blocks() const { return blocks_; }

  void extend_path_to(std::size_t n);

  /// Grows the path until k blocks are complete or no further block can
  /// complete. Throws horizon_exceeded past max_vertices.
  void ensure_complete_blocks(std::size_t k, std::size_t max_vertices = kDefaultMaxVertices);

  /// Grows a non-attained rational path until its infinite block is open.
  void ensure_infinite_block(std::size_t max_vertices = kDefaultMaxVertices);

  std::size_t complete_block_count() const;
  bool has_infinite_block() const { return !blocks_.empty() && blocks_.back().infinite; }
  /// No block beyond the current ones will ever complete.
  bool finished() const { return path_.terminated() || has_infinite_block(); }

  static constexpr std::size_t kDefaultMaxVertices = std::size_t{1} << 20;

 private:
  void validate_explicit_vertices() const;
  void absorb(std::size_t first_new_vertex);
  Block open_block(std::size_t start) const;

  FareyPath path_;
  std::vector<Block> blocks_;
};

BlockDecomposition decompose(const FareyPath& path);

/// Number of maximal blocks (finite ones plus the infinite one) of the path
/// from `start` toward the non-attained rational r.
std::size_t n_of_r(const Slope& r, const Slope& start, std::size_t max_vertices = BlockDecomposition::kDefaultMaxVertices);

/// Blocks from index `from` repeat with period `length`: block from + i + length
/// is the image of block from + i under a fixed SL2(Z) map.
struct BlockPeriod {
  std::size_t from = 0;
  std::size_t length = 0;
  /// Basic slices in one period.
  std::size_t slices = 0;
};

/// Detects periodicity of the block structure for a quadratic target (a surd
/// or a periodic continued fraction) by
/// looking for two blocks whose witnesses send the target to the same surd.
/// Returns nullopt for other targets or when nothing repeats within
/// max_blocks blocks.
std::optional<BlockPeriod> find_block_period(BlockDecomposition& decomposition, std::size_t max_blocks);

}  // namespace toric
