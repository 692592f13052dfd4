#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "delkit/bitstring.hpp"

namespace delkit {

/// Strictly increasing set of 0-based positions. Serves as projection mask,
/// deletion mask and initial mask alike; rendered 1-based.
class Mask {
 public:
  Mask() = default;

  /// Throws InvalidArgument unless `indices` is strictly increasing.
  explicit Mask(std::vector<std::size_t> indices);

  [[nodiscard]] std::size_t size() const noexcept { return indices_.size(); }
  [[nodiscard]] bool empty() const noexcept { return indices_.empty(); }
  [[nodiscard]] std::size_t operator[](std::size_t i) const { return indices_[i]; }
  [[nodiscard]] std::size_t back() const { return indices_.back(); }
  [[nodiscard]] const std::vector<std::size_t>& indices() const noexcept { return indices_; }

  /// y filtered by this mask. Throws InvalidArgument if an index is out of
  /// range for y.
  [[nodiscard]] BitString apply(const BitString& y) const;

  /// The positions of [0, n) not in this mask.
  [[nodiscard]] Mask complement(std::size_t n) const;

  /// "{1, 2, 3}", 1-based.
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Mask&, const Mask&) = default;
  friend auto operator<=>(const Mask&, const Mask&) = default;

 private:
  std::vector<std::size_t> indices_;
};

}  // namespace delkit
