#pragma once

#include <cstdint>
#include <vector>

#include "pscc/f2.hpp"

namespace pscc {

enum class CodeFamily { reed_muller, simplex, partial_simplex };

// Linear block code given by an explicit generator matrix.
struct BlockCode {
  BinaryMatrix generator;
  CodeFamily family = CodeFamily::reed_muller;
  int m = 0;              // order for reed_muller / simplex
  int k = 0, delta = 0;   // parameters for partial_simplex

  std::size_t dim() const { return generator.rows(); }
  std::size_t length() const { return generator.cols(); }
};

// All 2^dim codewords in the doubling order obtained by walking the generator
// rows (row 1 first, rows 2..dim doubling the list, row 1 again over the
// accumulated half), together with the row subset forming each word.
struct CodewordEnumeration {
  std::vector<BinaryVector> words;
  std::vector<std::vector<int>> combos;  // 1-based row indices, ascending
};

// First-order Reed-Muller generator, (m+1) x 2^m, built by the doubling
// recursion [R R; 0..0 1..1] from R(1) = (11; 01).
BlockCode reed_muller_generator(int m);

// Simplex generator, m x (2^m - 1); column j holds the binary digits of j+1
// with row 1 as the most significant bit.
BlockCode simplex_generator(int m);

// k-partial simplex generator, (delta+k) x (2^(delta+k) - 2^delta), assembled
// from the block-upper-triangular layout of Reed-Muller blocks R(m), R(m-1),
// ..., R(delta) with block l preceded by l zero rows (m = delta+k-1). The
// column multiset equals the simplex columns with all-zero k-prefix removed;
// the decoding machinery depends on this exact block column order, so the
// multiset equality is checked by tests rather than used as the constructor.
BlockCode partial_simplex_generator(int k, int delta);

CodewordEnumeration enumerate_codewords(const BlockCode& code);

// 1-based lexicographic rank of the indicator tuple of a row subset, with
// row 1 as the most significant position.
std::uint64_t combo_lex_rank(const std::vector<int>& combo, int dim);

}  // namespace pscc
