#include "delkit/mask.hpp"

#include "delkit/error.hpp"

namespace delkit {

Mask::Mask(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  for (std::size_t i = 1; i < indices_.size(); ++i) {
    if (indices_[i - 1] >= indices_[i]) throw InvalidArgument("mask indices must be strictly increasing");
  }
}

BitString Mask::apply(const BitString& y) const {
  std::vector<Bit> bits;
  bits.reserve(indices_.size());
  for (std::size_t i : indices_) {
    if (i >= y.size()) throw InvalidArgument("mask index out of range");
    bits.push_back(y[i]);
  }
  return BitString(std::move(bits));
}

Mask Mask::complement(std::size_t n) const {
  std::vector<std::size_t> out;
  out.reserve(n > indices_.size() ? n - indices_.size() : 0);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (next < indices_.size() && indices_[next] == i) {
      ++next;
    } else {
      out.push_back(i);
    }
  }
  Mask m;
  m.indices_ = std::move(out);
  return m;
}

std::string Mask::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(indices_[i] + 1);
  }
  out += '}';
  return out;
}

}  // namespace delkit
