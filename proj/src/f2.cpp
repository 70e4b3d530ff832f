#include "pscc/f2.hpp"

#include <bit>
#include <sstream>

namespace pscc {

BinaryVector BinaryVector::from_string(std::string_view bits) {
  BinaryVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i, true);
    else if (bits[i] != '0')
      throw ParseError("BinaryVector: expected '0' or '1', got '" +
                       std::string(1, bits[i]) + "'");
  }
  return v;
}

BinaryVector BinaryVector::from_bits(std::initializer_list<int> bits) {
  BinaryVector v(bits.size());
  std::size_t i = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw ParameterError("BinaryVector: bits must be 0 or 1");
    v.set(i++, b != 0);
  }
  return v;
}

BinaryVector& BinaryVector::operator^=(const BinaryVector& rhs) {
  if (len_ != rhs.len_)
    throw DimensionError("BinaryVector xor: length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= rhs.words_[w];
  return *this;
}

std::string BinaryVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BinaryVector BinaryMatrix::row(std::size_t r) const {
  assert(r < rows_);
  BinaryVector v(cols_);
  for (std::size_t w = 0; w < words_per_row_; ++w)
    v.words_[w] = data_[r * words_per_row_ + w];
  return v;
}

BinaryVector BinaryMatrix::column(std::size_t c) const {
  assert(c < cols_);
  BinaryVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.set(r, get(r, c));
  return v;
}

void BinaryMatrix::xor_row_into(std::size_t r, BinaryVector& acc) const {
  assert(r < rows_);
  if (acc.len_ != cols_)
    throw DimensionError("BinaryMatrix::xor_row_into: length mismatch");
  for (std::size_t w = 0; w < words_per_row_; ++w)
    acc.words_[w] ^= data_[r * words_per_row_ + w];
}

std::size_t BinaryMatrix::rank() const {
  std::vector<std::vector<std::uint64_t>> rows(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    rows[r].assign(data_.begin() + r * words_per_row_,
                   data_.begin() + (r + 1) * words_per_row_);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const std::size_t w = c >> 6;
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    std::size_t pivot = rows_;
    for (std::size_t r = rank; r < rows_; ++r)
      if (rows[r][w] & mask) {
        pivot = r;
        break;
      }
    if (pivot == rows_) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows_; ++r)
      if (r != rank && (rows[r][w] & mask))
        for (std::size_t i = 0; i < words_per_row_; ++i) rows[r][i] ^= rows[rank][i];
    ++rank;
  }
  return rank;
}

std::string BinaryMatrix::to_text() const {
  std::string out;
  out.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(get(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

BinaryMatrix BinaryMatrix::from_text(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("BinaryMatrix: no rows");
  const std::size_t cols = lines[0].size();
  BinaryMatrix m(lines.size(), cols);
  for (std::size_t r = 0; r < lines.size(); ++r) {
    if (lines[r].size() != cols) throw ParseError("BinaryMatrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (lines[r][c] == '1')
        m.set(r, c, true);
      else if (lines[r][c] != '0')
        throw ParseError("BinaryMatrix: expected '0' or '1'");
    }
  }
  return m;
}

BipolarVector::BipolarVector(std::vector<std::int8_t> vals) : vals_(std::move(vals)) {
  for (std::int8_t v : vals_)
    if (v != 1 && v != -1)
      throw ParameterError("BipolarVector: entries must be -1 or +1");
}

int weight(const BinaryVector& v) {
  int w = 0;
  for (std::uint64_t word : v.words()) w += std::popcount(word);
  return w;
}

int hamming_distance(const BinaryVector& a, const BinaryVector& b) {
  if (a.size() != b.size())
    throw DimensionError("hamming_distance: length mismatch");
  int d = 0;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) d += std::popcount(wa[i] ^ wb[i]);
  return d;
}

BipolarVector to_bipolar(const BinaryVector& v) {
  std::vector<std::int8_t> vals(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) vals[i] = v.get(i) ? 1 : -1;
  return BipolarVector(std::move(vals));
}

BinaryVector from_bipolar(const BipolarVector& v) {
  BinaryVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.set(i, v[i] > 0);
  return out;
}

int inner_product(const BipolarVector& a, const BipolarVector& b) {
  if (a.size() != b.size())
    throw DimensionError("inner_product: length mismatch");
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

int distance_from_inner_product(int n, int ip) {
  if (ip > n || ip < -n || ((n - ip) & 1))
    throw ParameterError("distance_from_inner_product: invalid inner product");
  return (n - ip) / 2;
}

BinaryVector f2_matvec(const BinaryVector& u, const BinaryMatrix& m) {
  if (u.size() != m.rows())
    throw DimensionError("f2_matvec: vector length must match row count");
  BinaryVector acc(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (u.get(r)) m.xor_row_into(r, acc);
  return acc;
}

}  // namespace pscc
