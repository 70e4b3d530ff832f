#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pscc/errors.hpp"

namespace pscc {

// Vector over GF(2), bit-packed into 64-bit words. Unused high bits of the
// last word are kept zero so popcount-based operations stay exact.
class BinaryVector {
 public:
  BinaryVector() = default;
  explicit BinaryVector(std::size_t len) : words_((len + 63) / 64, 0), len_(len) {}

  static BinaryVector from_string(std::string_view bits);
  static BinaryVector from_bits(std::initializer_list<int> bits);

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool get(std::size_t i) const {
    assert(i < len_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool value) {
    assert(i < len_);
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) {
    assert(i < len_);
    words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
  }

  BinaryVector& operator^=(const BinaryVector& rhs);
  friend BinaryVector operator^(BinaryVector lhs, const BinaryVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  friend bool operator==(const BinaryVector&, const BinaryVector&) = default;

  std::span<const std::uint64_t> words() const { return words_; }
  std::string to_string() const;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t len_ = 0;

  friend class BinaryMatrix;
};

// Dense GF(2) matrix with bit-packed rows.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
        data_(rows * words_per_row_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return (data_[r * words_per_row_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool value) {
    assert(r < rows_ && c < cols_);
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    std::uint64_t& w = data_[r * words_per_row_ + (c >> 6)];
    if (value)
      w |= mask;
    else
      w &= ~mask;
  }

  BinaryVector row(std::size_t r) const;
  BinaryVector column(std::size_t c) const;
  // acc ^= row r, word at a time.
  void xor_row_into(std::size_t r, BinaryVector& acc) const;

  // Rank over GF(2) by Gaussian elimination.
  std::size_t rank() const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

  // One row per line, characters '0'/'1'.
  std::string to_text() const;
  static BinaryMatrix from_text(std::string_view text);

 private:
  std::size_t rows_ = 0, cols_ = 0, words_per_row_ = 0;
  std::vector<std::uint64_t> data_;
};

// Word with entries in {-1,+1}; the bipolar image of a binary word.
class BipolarVector {
 public:
  BipolarVector() = default;
  explicit BipolarVector(std::vector<std::int8_t> vals);

  std::size_t size() const { return vals_.size(); }
  int operator[](std::size_t i) const { return vals_[i]; }
  std::span<const std::int8_t> values() const { return vals_; }

  friend bool operator==(const BipolarVector&, const BipolarVector&) = default;

 private:
  std::vector<std::int8_t> vals_;
};

int weight(const BinaryVector& v);
int hamming_distance(const BinaryVector& a, const BinaryVector& b);

// 0 -> -1, 1 -> +1, order preserved.
BipolarVector to_bipolar(const BinaryVector& v);
BinaryVector from_bipolar(const BipolarVector& v);

int inner_product(const BipolarVector& a, const BipolarVector& b);

// d = (n - ip) / 2; requires |ip| <= n and n - ip even.
int distance_from_inner_product(int n, int ip);

// GF(2) combination of the rows of m selected by u.
BinaryVector f2_matvec(const BinaryVector& u, const BinaryMatrix& m);

}  // namespace pscc
