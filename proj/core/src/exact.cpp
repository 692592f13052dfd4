#include "delkit/exact.hpp"

#include <limits>

#include "delkit/budget.hpp"
#include "delkit/error.hpp"

namespace delkit {

ExactCount binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  ExactCount result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n - k + i, i) here
  }
  return result;
}

ExactCount multichoose(std::int64_t bins, std::int64_t items) {
  if (items < 0 || bins < 0) return 0;
  if (items == 0) return 1;
  if (bins == 0) return 0;
  return binomial(bins + items - 1, items);
}

ExactCount pow2(std::uint32_t exponent) {
  ExactCount one = 1;
  return one << exponent;
}

std::uint64_t to_u64(const ExactCount& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
    throw OverflowError("value " + value.str() + " does not fit in 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

std::string to_string(const ExactCount& value) { return value.str(); }

void require_scan_budget(std::size_t n, const EnumerationBudget& budget) {
  if (n > budget.max_n) {
    throw BudgetExceeded("n = " + std::to_string(n) + " exceeds the enumeration budget of " +
                         std::to_string(budget.max_n));
  }
  if (n > kMaxScanLength) {
    throw BudgetExceeded("n = " + std::to_string(n) + " exceeds the scan limit of " +
                         std::to_string(kMaxScanLength));
  }
}

}  // namespace delkit
