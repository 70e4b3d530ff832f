#include "pscc/block_codes.hpp"

namespace pscc {

namespace {
constexpr int kMaxDim = 20;  // enumeration and materialization cap
}

BlockCode reed_muller_generator(int m) {
  if (m < 1) throw ParameterError("reed_muller_generator: m must be >= 1");
  if (m >= kMaxDim) throw ResourceError("reed_muller_generator: m too large");
  BinaryMatrix g(2, 2);
  g.set(0, 0, true);
  g.set(0, 1, true);
  g.set(1, 1, true);
  for (int mm = 2; mm <= m; ++mm) {
    const std::size_t half = std::size_t{1} << (mm - 1);
    BinaryMatrix next(mm + 1, 2 * half);
    for (std::size_t r = 0; r + 1 < static_cast<std::size_t>(mm + 1); ++r)
      for (std::size_t c = 0; c < half; ++c)
        if (g.get(r, c)) {
          next.set(r, c, true);
          next.set(r, c + half, true);
        }
    for (std::size_t c = 0; c < half; ++c) next.set(mm, half + c, true);
    g = next;
  }
  return {std::move(g), CodeFamily::reed_muller, m, 0, 0};
}

BlockCode simplex_generator(int m) {
  if (m < 1) throw ParameterError("simplex_generator: m must be >= 1");
  if (m >= kMaxDim) throw ResourceError("simplex_generator: m too large");
  const std::size_t cols = (std::size_t{1} << m) - 1;
  BinaryMatrix g(m, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    const std::size_t value = j + 1;
    for (int r = 0; r < m; ++r)
      if ((value >> (m - 1 - r)) & 1) g.set(r, j, true);
  }
  return {std::move(g), CodeFamily::simplex, m, 0, 0};
}

BlockCode partial_simplex_generator(int k, int delta) {
  if (k < 1 || delta < 1)
    throw ParameterError("partial_simplex_generator: k and delta must be >= 1");
  if (k + delta >= kMaxDim)
    throw ResourceError("partial_simplex_generator: k + delta too large");
  const int m = delta + k - 1;
  const std::size_t cols =
      (std::size_t{1} << (delta + k)) - (std::size_t{1} << delta);
  BinaryMatrix g(delta + k, cols);
  std::size_t off = 0;
  for (int l = 0; l < k; ++l) {
    const BlockCode block = reed_muller_generator(m - l);
    for (std::size_t r = 0; r < block.generator.rows(); ++r)
      for (std::size_t c = 0; c < block.generator.cols(); ++c)
        if (block.generator.get(r, c)) g.set(l + r, off + c, true);
    off += block.generator.cols();
  }
  return {std::move(g), CodeFamily::partial_simplex, 0, k, delta};
}

CodewordEnumeration enumerate_codewords(const BlockCode& code) {
  const int dim = static_cast<int>(code.dim());
  if (dim < 1) throw ParameterError("enumerate_codewords: empty generator");
  // materializes 2^dim words of the full block length
  if (dim > 14) throw ResourceError("enumerate_codewords: dimension too large");
  CodewordEnumeration e;
  e.words.reserve(std::size_t{1} << dim);
  e.combos.reserve(std::size_t{1} << dim);
  e.words.push_back(code.generator.row(0));
  e.combos.push_back({1});
  for (int i = 2; i <= dim; ++i) {
    const std::size_t sz = e.words.size();
    for (std::size_t t = 0; t < sz; ++t) {
      BinaryVector w = e.words[t];
      code.generator.xor_row_into(i - 1, w);
      e.words.push_back(std::move(w));
      std::vector<int> combo = e.combos[t];
      combo.push_back(i);
      e.combos.push_back(std::move(combo));
    }
  }
  const std::size_t half = e.words.size();
  for (std::size_t t = 0; t < half; ++t) {
    BinaryVector w = e.words[t];
    code.generator.xor_row_into(0, w);
    e.words.push_back(std::move(w));
    // every first-half combo starts with row 1; drop it
    e.combos.emplace_back(e.combos[t].begin() + 1, e.combos[t].end());
  }
  return e;
}

std::uint64_t combo_lex_rank(const std::vector<int>& combo, int dim) {
  std::uint64_t rank = 1;
  for (int j : combo) {
    if (j < 1 || j > dim)
      throw ParameterError("combo_lex_rank: row index out of range");
    rank += std::uint64_t{1} << (dim - j);
  }
  return rank;
}

}  // namespace pscc
