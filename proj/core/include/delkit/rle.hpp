#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "delkit/bitstring.hpp"

namespace delkit {

/// Run-length encoding (a1; k1, ..., kl). Adjacent blocks alternate, so only
/// the leading symbol is stored. The empty string has zero blocks and its
/// leading symbol is meaningless.
struct Rle {
  Bit leading = 0;
  std::vector<std::size_t> blocks;

  [[nodiscard]] std::size_t block_count() const noexcept { return blocks.size(); }
  [[nodiscard]] std::size_t length() const noexcept;
  /// Symbol of block i (0-based).
  [[nodiscard]] Bit symbol(std::size_t i) const noexcept {
    return static_cast<Bit>(leading ^ (i & 1U));
  }

  friend bool operator==(const Rle&, const Rle&) = default;
};

[[nodiscard]] Rle rle_encode(const BitString& s);

/// Throws InvalidArgument on a zero-length block or a leading symbol other
/// than 0/1.
[[nodiscard]] BitString rle_decode(const Rle& r);

/// "(0; 2,2,1,1,3,1)"; the empty encoding renders as "()".
[[nodiscard]] std::string to_string(const Rle& r);

/// Accepts the text form produced by to_string, with optional whitespace.
[[nodiscard]] Rle parse_rle(std::string_view text);

}  // namespace delkit
