#pragma once

#include <cstdint>
#include <vector>

#include "pscc/f2.hpp"
#include "pscc/opcount.hpp"

namespace pscc {

// Permutation materialized as an index array; forward()[i] is the source
// index of output position i, so applying costs O(L) lookups.
class PermutationMap {
 public:
  explicit PermutationMap(std::vector<std::uint32_t> forward);

  std::size_t size() const { return forward_.size(); }
  std::uint32_t operator[](std::size_t i) const { return forward_[i]; }
  const std::vector<std::uint32_t>& forward() const { return forward_; }

  template <typename T>
  std::vector<T> apply(const std::vector<T>& x) const {
    std::vector<T> out(x.size());
    for (std::size_t i = 0; i < forward_.size(); ++i) out[i] = x[forward_[i]];
    return out;
  }

  friend bool operator==(const PermutationMap&, const PermutationMap&) = default;

 private:
  std::vector<std::uint32_t> forward_;
};

// Dense matrix with entries in {-1,+1}.
class SignedMatrix {
 public:
  SignedMatrix() = default;
  SignedMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 1) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int get(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, int v);

  std::vector<int> row(std::size_t r) const;

  friend bool operator==(const SignedMatrix&, const SignedMatrix&) = default;

  // '+'/'-' characters, one row per line (debug dump).
  std::string to_text() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int8_t> data_;
};

// Sylvester Hadamard matrix of size 2^m, by the doubling recursion.
// Materialization only; m is capped at 12.
SignedMatrix hadamard_matrix(int m);

// Perfect out-shuffle: interleaves the two halves keeping element 0 first,
// (x_0, x_{L/2}, x_1, x_{L/2+1}, ...).
PermutationMap faro_out_shuffle(std::size_t len);

// H_{2^m} * x via m rounds of out-shuffle followed by pairwise (a+b, a-b)
// butterflies; exact integers, m * 2^m additions. The shuffle direction is
// checked once against the dense matrix for small sizes.
std::vector<std::int32_t> fwht(std::vector<std::int32_t> x, OpCount* ops = nullptr);

// Row shuffle that interleaves 2^(l-1) stacked copies of -H and 2^(l-1)
// copies of H into codeword-enumeration order: output position j*2^l + c
// takes input c*2^(k+delta-l-1) + j.
PermutationMap build_T(int k, int delta, int l);

// The 2^(k+delta-1) x 2^(k+delta-l-1) block of the enumerated partial simplex
// matrix: T applied to the stack of +-H copies.
SignedMatrix build_Hhat(int k, int delta, int l);

// Bipolar matrix of all enumerated partial simplex codewords:
// [H  Hhat...; -H  Hhat...]. Materialization for tests.
SignedMatrix build_Htilde(int k, int delta);

// Permutation taking the entries of Htilde * r^T to branch-tuple
// lexicographic order: output i reads the entry at the lexicographic rank of
// enumeration row i's combination; rows past the halfway point reuse the
// first-half assignment shifted down by 2^(k+delta-1). The map is an
// involution, which is what makes this reindex correct (checked by tests).
PermutationMap build_Q(int k, int delta);

// Branch metrics for one received block, indexed by the lexicographic rank
// (0-based) of the (input, state) branch tuple.
struct DistanceProfile {
  std::vector<std::int32_t> metrics;
};

// Precomputed tables for producing a DistanceProfile in O(n log n) integer
// additions: per-part fast transforms, sign-replicated Hhat expansions, and
// the reindexing permutation.
class DistanceProfiler {
 public:
  DistanceProfiler(int k, int delta);

  int k() const { return k_; }
  int delta() const { return delta_; }
  int block_length() const { return n_; }

  DistanceProfile profile(const BipolarVector& received, OpCount* ops = nullptr) const;

 private:
  int k_, delta_, m_, n_;
  std::vector<std::uint32_t> q_;
  struct HatExpansion {
    std::vector<std::uint32_t> src;  // source row of the part transform
    std::vector<std::int8_t> sign;
  };
  std::vector<HatExpansion> hats_;                    // l = 1..k-1
  std::vector<std::vector<std::uint32_t>> shuffles_;  // out-shuffle per part
};

// One-shot convenience wrapper around DistanceProfiler.
DistanceProfile branch_distance_profile(const BipolarVector& r, int k, int delta,
                                        OpCount* ops = nullptr);

}  // namespace pscc
