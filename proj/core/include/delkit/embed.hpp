#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "delkit/bitstring.hpp"
#include "delkit/budget.hpp"
#include "delkit/exact.hpp"
#include "delkit/mask.hpp"

namespace delkit {

/// Counts ω_x(y) by the O(|x|·|y|) recurrence
/// N(i, j) = N(i-1, j) + [y_i = x_j] N(i-1, j-1), N(·, 0) = 1.
/// ω_ε(y) = 1 and ω_x(y) = 0 when |x| > |y|.
[[nodiscard]] ExactCount count_embeddings_dp(const BitString& y, const BitString& x);

/// Same recurrence in 64-bit arithmetic. Every intermediate value is bounded
/// by C(|y|, j), so the result is exact whenever |y| <= kMaxScanLength;
/// longer inputs throw OverflowError.
[[nodiscard]] std::uint64_t embedding_weight(const BitString& y, const BitString& x);

/// All projection masks π with y_π = x, in lexicographic order. The first
/// element (if any) is the initial mask. Throws BudgetExceeded when |y| or the
/// number of masks exceeds the budget.
[[nodiscard]] std::vector<Mask> enumerate_masks(const BitString& y, const BitString& x,
                                                const EnumerationBudget& budget = {});

/// A strictly increasing, parity-preserving map from the blocks of x to the
/// blocks of y, stored as its image sequence (0-based block indices).
struct BlockMap {
  std::vector<std::size_t> image;

  /// "1->1,2->4", 1-based.
  [[nodiscard]] std::string str() const;

  friend bool operator==(const BlockMap&, const BlockMap&) = default;
  friend auto operator<=>(const BlockMap&, const BlockMap&) = default;
};

/// |S| for l' blocks of x and l blocks of y, by the closed form C(l' + u, u)
/// with u = (l~ - l') / 2 and l~ the largest value <= l of the parity of l'.
[[nodiscard]] ExactCount sigma_count(std::size_t x_blocks, std::size_t y_blocks);

/// |S| by the first-block recurrence sigma(l', l) = Σ_i sigma(l'-1, l-1-2i).
/// Kept as an independent route for cross-checking sigma_count.
[[nodiscard]] ExactCount sigma_count_recursive(std::size_t x_blocks, std::size_t y_blocks);

/// Every map in S, in lexicographic order of images.
[[nodiscard]] std::vector<BlockMap> enumerate_block_maps(std::size_t x_blocks,
                                                         std::size_t y_blocks);

/// One summand of the run-based count: a block map and |ω_f|.
struct BlockMapTerm {
  BlockMap map;
  ExactCount count;
};

/// The per-map breakdown of ω_x(y). When y and x start with different
/// symbols, y's first block is dropped first and block indices refer to the
/// trimmed y. Terms with |ω_f| = 0 are kept. Empty when x is empty.
[[nodiscard]] std::vector<BlockMapTerm> block_map_terms(const BitString& y, const BitString& x);

/// ω_x(y) as Σ_{f ∈ S} |ω_f|.
[[nodiscard]] ExactCount count_embeddings_runs(const BitString& y, const BitString& x);

/// The block map that a projection mask belongs to: block i of x is sent to
/// the (trimmed) y block holding the position matched to the last symbol of
/// block i. Throws InvalidArgument if `mask` does not project y onto x.
[[nodiscard]] BlockMap induced_block_map(const BitString& y, const BitString& x,
                                         const Mask& mask);

}  // namespace delkit
