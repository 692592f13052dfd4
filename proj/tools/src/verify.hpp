#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "delkit/budget.hpp"
#include "table.hpp"

namespace delkit::cli {

/// Suite names accepted by `verify --suite`, excluding "all".
const std::vector<std::string>& verify_suites();

/// Appends one (suite, case, lhs, rhs, ok) row per checked case. Returns
/// false if any case failed.
bool run_suite(const std::string& suite, std::size_t max_m, const EnumerationBudget& budget,
               Table& out);

}  // namespace delkit::cli
