#pragma once

// Shared scanning loop over {0,1}^n for the enumeration-based operations.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "delkit/bitstring.hpp"
#include "delkit/budget.hpp"

namespace delkit::detail {

/// Calls visit(code, weight) for every n-bit code containing x, in increasing
/// code order (= lexicographic order of the strings).
template <typename Visit>
void scan_supersequences(std::size_t n, const BitString& x, const EnumerationBudget& budget,
                         Visit&& visit) {
  require_scan_budget(n, budget);
  const std::size_t m = x.size();
  if (m > n) return;
  std::vector<Bit> xs(x.begin(), x.end());
  std::vector<std::uint64_t> ways(m + 1);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t code = 0; code < limit; ++code) {
    // Greedy containment test first; most codes are rejected here.
    std::size_t matched = 0;
    for (std::size_t i = 0; i < n && matched < m; ++i) {
      if (((code >> (n - 1 - i)) & 1U) == xs[matched]) ++matched;
    }
    if (matched < m) continue;
    std::fill(ways.begin(), ways.end(), 0);
    ways[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const Bit b = static_cast<Bit>((code >> (n - 1 - i)) & 1U);
      const std::size_t hi = i + 1 < m ? i + 1 : m;
      for (std::size_t j = hi; j >= 1; --j) {
        if (xs[j - 1] == b) ways[j] += ways[j - 1];
      }
    }
    visit(code, ways[m]);
  }
}

}  // namespace delkit::detail
