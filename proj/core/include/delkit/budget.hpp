#pragma once

#include <cstddef>
#include <cstdint>

namespace delkit {

/// Size limits for exhaustive enumerations. Operations refuse inputs beyond
/// the limits rather than truncating.
struct EnumerationBudget {
  /// Largest supersequence length scanned over {0,1}^n.
  std::size_t max_n = 24;
  /// Largest number of masks materialized by a single listing call.
  std::uint64_t max_items = std::uint64_t{1} << 22;
};

/// Hard ceiling imposed by the 64-bit string codes used while scanning.
inline constexpr std::size_t kMaxScanLength = 62;

/// Throws BudgetExceeded if n exceeds the budget (or kMaxScanLength).
void require_scan_budget(std::size_t n, const EnumerationBudget& budget);

}  // namespace delkit
