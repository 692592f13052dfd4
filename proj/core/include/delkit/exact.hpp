#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace delkit {

/// Arbitrary-precision nonnegative count. Arithmetic never wraps.
using ExactCount = boost::multiprecision::cpp_int;

/// Exact rational, used for posteriors.
using ExactRational = boost::multiprecision::cpp_rational;

/// C(n, k), with C(n, k) = 0 whenever k < 0, k > n or n < 0.
ExactCount binomial(std::int64_t n, std::int64_t k);

/// Number of ways to drop `items` indistinguishable objects into `bins`
/// distinguishable bins: C(bins + items - 1, items), with the empty-bin
/// conventions multichoose(0, 0) = 1 and multichoose(0, items > 0) = 0.
ExactCount multichoose(std::int64_t bins, std::int64_t items);

ExactCount pow2(std::uint32_t exponent);

/// Narrowing conversion; throws OverflowError if the value does not fit.
std::uint64_t to_u64(const ExactCount& value);

std::string to_string(const ExactCount& value);

}  // namespace delkit
