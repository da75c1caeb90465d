#include "convgraph/types.hpp"

#include <algorithm>
#include <numeric>

#include "convgraph/errors.hpp"

namespace convgraph {

BitVec BitVec::from_string(std::string_view s) {
  BitVec v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      v.bits_[i] = 1;
    } else if (s[i] != '0') {
      throw ParseError("bitstring contains character '" +
                       std::string(1, s[i]) + "'");
    }
  }
  return v;
}

std::string BitVec::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

bool BitVec::any() const {
  return std::any_of(bits_.begin(), bits_.end(),
                     [](std::uint8_t b) { return b != 0; });
}

std::size_t BitVec::count() const {
  return static_cast<std::size_t>(
      std::accumulate(bits_.begin(), bits_.end(), std::size_t{0}));
}

BitVec BitVec::slice(std::size_t begin, std::size_t len) const {
  if (begin + len > bits_.size()) {
    throw WidthMismatch("slice out of range");
  }
  BitVec out(len);
  std::copy_n(bits_.begin() + static_cast<std::ptrdiff_t>(begin), len,
              out.bits_.begin());
  return out;
}

BitVec BitVec::concat(const BitVec& other) const {
  BitVec out(bits_.size() + other.bits_.size());
  std::copy(bits_.begin(), bits_.end(), out.bits_.begin());
  std::copy(other.bits_.begin(), other.bits_.end(),
            out.bits_.begin() + static_cast<std::ptrdiff_t>(bits_.size()));
  return out;
}

Vector BitVec::to_vector() const {
  Vector v(static_cast<Eigen::Index>(bits_.size()));
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = bits_[i] ? 1.0 : 0.0;
  }
  return v;
}

std::size_t BitVecHash::operator()(const BitVec& v) const noexcept {
  // FNV-1a
  std::size_t h = 14695981039346656037ULL;
  for (std::uint8_t b : v.raw()) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace convgraph
