#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace delkit {

/// A single binary symbol, always 0 or 1.
using Bit = std::uint8_t;

/// Immutable finite sequence over {0, 1}.
///
/// Ordering is lexicographic on the symbols, which for strings of equal
/// length coincides with the numeric order of their codes.
class BitString {
 public:
  BitString() = default;

  /// Throws InvalidArgument if any element is not 0 or 1.
  explicit BitString(std::vector<Bit> bits);

  /// Parses the '0'/'1' text form. The empty string is accepted.
  static BitString parse(std::string_view text);

  /// The `length`-bit string whose first symbol is the most significant bit
  /// of `code`. Requires length <= 64.
  static BitString from_code(std::uint64_t code, std::size_t length);

  static BitString constant(std::size_t length, Bit symbol);

  /// 1010... (or 0101... when `first` is 0).
  static BitString alternating(std::size_t length, Bit first);

  [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
  [[nodiscard]] bool empty() const noexcept { return bits_.empty(); }
  [[nodiscard]] Bit operator[](std::size_t i) const { return bits_[i]; }
  [[nodiscard]] std::span<const Bit> bits() const noexcept { return bits_; }
  [[nodiscard]] auto begin() const noexcept { return bits_.begin(); }
  [[nodiscard]] auto end() const noexcept { return bits_.end(); }

  /// Inverse of from_code. Requires size() <= 64.
  [[nodiscard]] std::uint64_t code() const;

  [[nodiscard]] std::string str() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  std::vector<Bit> bits_;
};

[[nodiscard]] std::size_t hamming_weight(const BitString& s) noexcept;

/// Bitwise flip.
[[nodiscard]] BitString complement(const BitString& s);

/// True for the empty string and for 0^m, 1^m.
[[nodiscard]] bool is_constant(const BitString& s) noexcept;

}  // namespace delkit
