#pragma once

#include <vector>

#include "pscc/block_codes.hpp"

namespace pscc {

// Polynomial generator matrix G(z) = G_0 + G_1 z + ... + G_mu z^mu with
// generic row degrees: mu = ceil(delta/k), the trailing k*mu - delta rows of
// G_mu are zero, and the coefficient rows stack to a (delta+k) x n matrix.
class PolyGeneratorMatrix {
 public:
  // The k-partial simplex construction: slices the partial simplex generator
  // into row blocks of height k, padding the last slice with zero rows.
  static PolyGeneratorMatrix partial_simplex(int k, int delta);

  // Validates the generic-row-degree shape of arbitrary coefficients.
  static PolyGeneratorMatrix from_coefficients(std::vector<BinaryMatrix> coeffs);

  int k() const { return k_; }
  int n() const { return n_; }
  int delta() const { return delta_; }
  int mu() const { return mu_; }
  int gtilde_rows() const { return delta_ + k_ - k_ * mu_; }

  const BinaryMatrix& coeff(int i) const { return coeffs_[i]; }
  // (G_0; ...; G_{mu-1}; Gtilde_mu), the block-code generator the trellis
  // branch labels come from.
  const BinaryMatrix& stacked() const { return stacked_; }
  bool is_partial_simplex() const { return is_partial_simplex_; }

 private:
  PolyGeneratorMatrix() = default;
  int k_ = 0, n_ = 0, delta_ = 0, mu_ = 0;
  std::vector<BinaryMatrix> coeffs_;
  BinaryMatrix stacked_;
  bool is_partial_simplex_ = false;
};

// Largest degree with a nonzero entry, per row.
std::vector<int> row_degrees(const PolyGeneratorMatrix& g);

struct MessageSequence {
  std::vector<BinaryVector> blocks;  // each of length k
  friend bool operator==(const MessageSequence&, const MessageSequence&) = default;
};

struct PolyCodeword {
  std::vector<BinaryVector> blocks;  // each of length n
  friend bool operator==(const PolyCodeword&, const PolyCodeword&) = default;
};

// Zero-tail encoding: appends mu zero input blocks, then
// c_t = sum_{i=0..min(t,mu)} u_{t-i} G_i over GF(2).
PolyCodeword encode(const MessageSequence& u, const PolyGeneratorMatrix& g);

// Brute-force j-th column distance: minimum weight of the first j+1 output
// blocks over u_0 != 0. Requires G_0 of full rank k so that u_0 != 0 is
// equivalent to v_0 != 0.
int column_distance(const PolyGeneratorMatrix& g, int j);

// column_distance at a window past the plateau; for partial simplex codes
// with window >= floor(delta/k) this is the free distance.
int free_distance_estimate(const PolyGeneratorMatrix& g, int window);

// Closed-form column distance of the k-partial simplex construction:
// 2^(delta+k-1) + min(j, floor(delta/k)) * n/2.
int partial_simplex_column_distance(int k, int delta, int j);

std::vector<BipolarVector> to_bipolar_blocks(const PolyCodeword& c);

}  // namespace pscc
