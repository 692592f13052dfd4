#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "delkit/bitstring.hpp"
#include "delkit/entropy.hpp"
#include "delkit/exact.hpp"
#include "delkit/mask.hpp"

// Brute-force reference implementations. Nothing here calls into embed,
// space or entropy algorithms; only the value types are shared.
namespace delkit::oracle {

struct OracleBudget {
  /// Largest n for distributions.
  std::size_t max_n = 24;
  /// Largest n for full (y, ω, masks) listings.
  std::size_t max_listing_n = 14;
  /// Largest C(|y|, |x|) that oracle_count will iterate over.
  std::uint64_t max_subsets = std::uint64_t{1} << 26;
};

/// Counts index subsets π of size |x| with y_π = x by iterating all of them.
[[nodiscard]] ExactCount oracle_count(const BitString& y, const BitString& x,
                                      const OracleBudget& budget = {});

/// All masks by depth-first search over positions, lexicographic order.
[[nodiscard]] std::vector<Mask> oracle_masks(const BitString& y, const BitString& x);

enum class Listing {
  none,         // distribution only
  entries,      // y, ω and initial mask for each supersequence
  with_masks,   // additionally every mask
};

struct OracleEntry {
  BitString y;
  std::uint64_t weight = 0;
  std::size_t cluster = 0;
  Mask initial;
  std::vector<Mask> masks;
};

struct OracleSpace {
  WeightDistribution distribution;  // with by_cluster filled
  std::vector<OracleEntry> entries;
};

/// Exhaustive scan of {0,1}^n. Throws BudgetExceeded beyond max_n, or beyond
/// max_listing_n when a listing is requested.
[[nodiscard]] OracleSpace oracle_space(std::size_t n, const BitString& x,
                                       Listing listing = Listing::none,
                                       const OracleBudget& budget = {});

/// Entropies summed per supersequence rather than per weight class.
[[nodiscard]] EntropyReport oracle_entropy(std::size_t n, const BitString& x,
                                           std::span<const double> alphas = {},
                                           const OracleBudget& budget = {});

}  // namespace delkit::oracle
