#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "pscc/block_codes.hpp"
#include "pscc/convolutional.hpp"
#include "pscc/f2.hpp"
#include "pscc/hadamard.hpp"

namespace testutil {

inline pscc::BinaryVector random_binary_vector(std::mt19937_64& rng, std::size_t len) {
  pscc::BinaryVector v(len);
  for (std::size_t i = 0; i < len; ++i) v.set(i, rng() & 1);
  return v;
}

inline pscc::BipolarVector random_bipolar_vector(std::mt19937_64& rng,
                                                 std::size_t len) {
  std::vector<std::int8_t> vals(len);
  for (std::size_t i = 0; i < len; ++i) vals[i] = (rng() & 1) ? 1 : -1;
  return pscc::BipolarVector(std::move(vals));
}

// Independent Sylvester Hadamard entry: (-1)^popcount(i & j).
inline int hadamard_entry(std::size_t i, std::size_t j) {
  return (std::popcount(i & j) & 1) ? -1 : 1;
}

// Dense H * x straight from the closed-form entries.
inline std::vector<std::int64_t> dense_hadamard_matvec(
    const std::vector<std::int32_t>& x) {
  const std::size_t len = x.size();
  std::vector<std::int64_t> out(len, 0);
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; j < len; ++j) out[i] += hadamard_entry(i, j) * x[j];
  return out;
}

// Codeword of a branch tuple: XOR of stacked-generator rows selected by the
// tuple bits, most significant bit selecting row 1.
inline pscc::BinaryVector tuple_codeword(std::uint32_t tuple,
                                         const pscc::BinaryMatrix& stacked) {
  const int bits = static_cast<int>(stacked.rows());
  pscc::BinaryVector v(stacked.cols());
  for (int r = 0; r < bits; ++r)
    if ((tuple >> (bits - 1 - r)) & 1) stacked.xor_row_into(r, v);
  return v;
}

// Brute-force distance profile: distance from r to every tuple codeword,
// indexed by tuple value.
inline std::vector<int> brute_force_profile(const pscc::BipolarVector& r,
                                            const pscc::BinaryMatrix& stacked) {
  const pscc::BinaryVector hard = pscc::from_bipolar(r);
  const std::uint32_t tuples = std::uint32_t{1} << stacked.rows();
  std::vector<int> out(tuples);
  for (std::uint32_t t = 0; t < tuples; ++t)
    out[t] = pscc::hamming_distance(hard, tuple_codeword(t, stacked));
  return out;
}

// Exhaustive maximum-likelihood metric over all zero-tail codewords.
inline std::int64_t exhaustive_best_metric(const pscc::PolyGeneratorMatrix& g,
                                           const pscc::PolyCodeword& r) {
  const int L = static_cast<int>(r.blocks.size()) - g.mu();
  std::int64_t best = -1;
  const std::uint64_t space = std::uint64_t{1} << (L * g.k());
  for (std::uint64_t mv = 0; mv < space; ++mv) {
    pscc::MessageSequence msg;
    for (int t = 0; t < L; ++t) {
      pscc::BinaryVector b(g.k());
      for (int bit = 0; bit < g.k(); ++bit)
        b.set(bit, (mv >> (t * g.k() + bit)) & 1);
      msg.blocks.push_back(std::move(b));
    }
    const pscc::PolyCodeword c = pscc::encode(msg, g);
    std::int64_t d = 0;
    for (std::size_t t = 0; t < c.blocks.size(); ++t)
      d += pscc::hamming_distance(c.blocks[t], r.blocks[t]);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

inline pscc::MessageSequence random_message(std::mt19937_64& rng, int L, int k) {
  pscc::MessageSequence msg;
  msg.blocks.reserve(L);
  for (int t = 0; t < L; ++t) msg.blocks.push_back(random_binary_vector(rng, k));
  return msg;
}

inline pscc::PolyCodeword random_received(std::mt19937_64& rng, int blocks, int n) {
  pscc::PolyCodeword r;
  r.blocks.reserve(blocks);
  for (int t = 0; t < blocks; ++t) r.blocks.push_back(random_binary_vector(rng, n));
  return r;
}

}  // namespace testutil
