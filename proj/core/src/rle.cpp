#include "delkit/rle.hpp"

#include <cctype>
#include <numeric>

#include "delkit/error.hpp"

namespace delkit {

std::size_t Rle::length() const noexcept {
  return std::accumulate(blocks.begin(), blocks.end(), std::size_t{0});
}

Rle rle_encode(const BitString& s) {
  Rle r;
  if (s.empty()) return r;
  r.leading = s[0];
  std::size_t run = 1;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == s[i - 1]) {
      ++run;
    } else {
      r.blocks.push_back(run);
      run = 1;
    }
  }
  r.blocks.push_back(run);
  return r;
}

BitString rle_decode(const Rle& r) {
  if (r.leading > 1) throw InvalidArgument("RLE leading symbol must be 0 or 1");
  std::vector<Bit> bits;
  bits.reserve(r.length());
  for (std::size_t i = 0; i < r.blocks.size(); ++i) {
    if (r.blocks[i] == 0) throw InvalidArgument("RLE blocks must have positive length");
    bits.insert(bits.end(), r.blocks[i], r.symbol(i));
  }
  return BitString(std::move(bits));
}

std::string to_string(const Rle& r) {
  if (r.blocks.empty()) return "()";
  std::string out = "(";
  out += static_cast<char>('0' + r.leading);
  out += "; ";
  for (std::size_t i = 0; i < r.blocks.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(r.blocks[i]);
  }
  out += ')';
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool consume(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char ch) {
    if (!consume(ch)) fail(std::string("expected '") + ch + "'");
  }
  std::size_t number() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("invalid RLE '" + std::string(text_) + "': " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Rle parse_rle(std::string_view text) {
  Cursor in(text);
  Rle r;
  in.expect('(');
  if (in.consume(')')) {
    if (!in.at_end()) in.fail("trailing characters");
    return r;
  }
  const std::size_t leading = in.number();
  if (leading > 1) in.fail("leading symbol must be 0 or 1");
  r.leading = static_cast<Bit>(leading);
  in.expect(';');
  do {
    const std::size_t k = in.number();
    if (k == 0) in.fail("blocks must have positive length");
    r.blocks.push_back(k);
  } while (in.consume(','));
  in.expect(')');
  if (!in.at_end()) in.fail("trailing characters");
  return r;
}

}  // namespace delkit
