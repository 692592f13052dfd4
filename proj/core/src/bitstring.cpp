#include "delkit/bitstring.hpp"

#include <algorithm>

#include "delkit/error.hpp"

namespace delkit {

BitString::BitString(std::vector<Bit> bits) : bits_(std::move(bits)) {
  if (std::any_of(bits_.begin(), bits_.end(), [](Bit b) { return b > 1; })) {
    throw InvalidArgument("bit string symbols must be 0 or 1");
  }
}

BitString BitString::parse(std::string_view text) {
  std::vector<Bit> bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw ParseError("invalid bit string '" + std::string(text) + "': expected only '0'/'1'");
    }
    bits.push_back(static_cast<Bit>(ch - '0'));
  }
  BitString s;
  s.bits_ = std::move(bits);
  return s;
}

BitString BitString::from_code(std::uint64_t code, std::size_t length) {
  if (length > 64) throw InvalidArgument("from_code supports at most 64 bits");
  BitString s;
  s.bits_.resize(length);
  for (std::size_t i = 0; i < length; ++i) {
    s.bits_[length - 1 - i] = static_cast<Bit>((code >> i) & 1U);
  }
  return s;
}

BitString BitString::constant(std::size_t length, Bit symbol) {
  return BitString(std::vector<Bit>(length, symbol));
}

BitString BitString::alternating(std::size_t length, Bit first) {
  std::vector<Bit> bits(length);
  for (std::size_t i = 0; i < length; ++i) bits[i] = static_cast<Bit>(first ^ (i & 1U));
  return BitString(std::move(bits));
}

std::uint64_t BitString::code() const {
  if (bits_.size() > 64) throw InvalidArgument("code() supports at most 64 bits");
  std::uint64_t code = 0;
  for (Bit b : bits_) code = (code << 1) | b;
  return code;
}

std::string BitString::str() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = static_cast<char>('0' + bits_[i]);
  return out;
}

std::size_t hamming_weight(const BitString& s) noexcept {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), Bit{1}));
}

BitString complement(const BitString& s) {
  std::vector<Bit> bits(s.begin(), s.end());
  for (Bit& b : bits) b ^= 1U;
  return BitString(std::move(bits));
}

bool is_constant(const BitString& s) noexcept {
  return std::adjacent_find(s.begin(), s.end(), std::not_equal_to<>()) == s.end();
}

}  // namespace delkit
