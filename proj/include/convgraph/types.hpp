#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace convgraph {

using Scalar = double;

template <typename T>
using MatrixX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using VectorX = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Scalar>;
using Vector = VectorX<Scalar>;

/// Fixed-width binary vector. Used for dialogue-act segments and full
/// dialogue states; comparison order is the canonical byte order that
/// node ids, tie-breaks and serialized output rely on.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : bits_(n, 0) {}

  static BitVec from_string(std::string_view s);

  std::string to_string() const;

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  bool test(std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool v = true) { bits_[i] = v ? 1 : 0; }

  bool any() const;
  std::size_t count() const;

  // [begin, begin+len)
  BitVec slice(std::size_t begin, std::size_t len) const;

  BitVec concat(const BitVec& other) const;

  Vector to_vector() const;

  const std::vector<std::uint8_t>& raw() const { return bits_; }

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend auto operator<=>(const BitVec&, const BitVec&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const noexcept;
};

}  // namespace convgraph
