#include "pscc/convolutional.hpp"

#include <algorithm>
#include <limits>

namespace pscc {

namespace {

bool row_is_zero(const BinaryMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m.get(r, c)) return false;
  return true;
}

// (G_0; ...; G_{mu-1}; Gtilde_mu): rows i*k + r come from coefficient i; the
// last block keeps only the leading delta + k - k*mu rows.
BinaryMatrix stack_coefficients(const std::vector<BinaryMatrix>& coeffs, int k,
                                int n, int delta) {
  BinaryMatrix stacked(delta + k, n);
  for (int row = 0; row < delta + k; ++row) {
    const int i = row / k;
    const int r = row % k;
    for (int c = 0; c < n; ++c)
      if (coeffs[i].get(r, c)) stacked.set(row, c, true);
  }
  return stacked;
}

}  // namespace

PolyGeneratorMatrix PolyGeneratorMatrix::partial_simplex(int k, int delta) {
  const BlockCode code = partial_simplex_generator(k, delta);
  PolyGeneratorMatrix g;
  g.k_ = k;
  g.delta_ = delta;
  g.n_ = static_cast<int>(code.length());
  g.mu_ = (delta + k - 1) / k;  // ceil(delta / k)
  g.coeffs_.reserve(g.mu_ + 1);
  for (int i = 0; i <= g.mu_; ++i) {
    BinaryMatrix gi(k, g.n_);
    for (int r = 0; r < k; ++r) {
      const int src = i * k + r;
      if (src >= delta + k) continue;  // zero padding rows of G_mu
      for (int c = 0; c < g.n_; ++c)
        if (code.generator.get(src, c)) gi.set(r, c, true);
    }
    g.coeffs_.push_back(std::move(gi));
  }
  g.stacked_ = code.generator;
  g.is_partial_simplex_ = true;
  return g;
}

PolyGeneratorMatrix PolyGeneratorMatrix::from_coefficients(
    std::vector<BinaryMatrix> coeffs) {
  if (coeffs.empty())
    throw ParameterError("PolyGeneratorMatrix: no coefficient matrices");
  const std::size_t k = coeffs[0].rows();
  const std::size_t n = coeffs[0].cols();
  if (k < 1 || n < k)
    throw ParameterError("PolyGeneratorMatrix: need 1 <= k <= n");
  for (const BinaryMatrix& c : coeffs)
    if (c.rows() != k || c.cols() != n)
      throw DimensionError("PolyGeneratorMatrix: inconsistent coefficient shapes");

  const int mu = static_cast<int>(coeffs.size()) - 1;
  bool top_nonzero = false;
  for (std::size_t r = 0; r < k; ++r)
    if (!row_is_zero(coeffs[mu], r)) top_nonzero = true;
  if (mu > 0 && !top_nonzero)
    throw ParameterError("PolyGeneratorMatrix: leading coefficient is zero");

  int delta = 0;
  for (std::size_t r = 0; r < k; ++r) {
    int nu = 0;
    for (int i = mu; i >= 0; --i)
      if (!row_is_zero(coeffs[i], r)) {
        nu = i;
        break;
      }
    delta += nu;
  }
  const int ceil_mu = (delta + static_cast<int>(k) - 1) / static_cast<int>(k);
  if (delta > 0 && mu != ceil_mu)
    throw ParameterError("PolyGeneratorMatrix: row degrees are not generic");
  const int gtilde = delta + static_cast<int>(k) - static_cast<int>(k) * mu;
  for (std::size_t r = gtilde; r < k; ++r)
    if (!row_is_zero(coeffs[mu], r))
      throw ParameterError("PolyGeneratorMatrix: row degrees are not generic");

  PolyGeneratorMatrix g;
  g.k_ = static_cast<int>(k);
  g.n_ = static_cast<int>(n);
  g.delta_ = delta;
  g.mu_ = mu;
  g.coeffs_ = std::move(coeffs);
  g.stacked_ = stack_coefficients(g.coeffs_, g.k_, g.n_, delta);
  g.is_partial_simplex_ = false;
  if (delta >= 1) {
    try {
      g.is_partial_simplex_ =
          g.stacked_ == partial_simplex_generator(g.k_, delta).generator;
    } catch (const ResourceError&) {
      g.is_partial_simplex_ = false;
    }
  }
  return g;
}

std::vector<int> row_degrees(const PolyGeneratorMatrix& g) {
  std::vector<int> nu(g.k(), 0);
  for (int r = 0; r < g.k(); ++r)
    for (int i = g.mu(); i >= 0; --i)
      if (!row_is_zero(g.coeff(i), r)) {
        nu[r] = i;
        break;
      }
  return nu;
}

PolyCodeword encode(const MessageSequence& u, const PolyGeneratorMatrix& g) {
  if (u.blocks.empty()) throw ParameterError("encode: empty message");
  for (const BinaryVector& b : u.blocks)
    if (static_cast<int>(b.size()) != g.k())
      throw DimensionError("encode: message block length must be k");
  const int L = static_cast<int>(u.blocks.size());
  PolyCodeword c;
  c.blocks.reserve(L + g.mu());
  for (int t = 0; t < L + g.mu(); ++t) {
    BinaryVector acc(g.n());
    for (int i = 0; i <= std::min(t, g.mu()); ++i) {
      const int s = t - i;
      if (s >= L) continue;  // zero tail blocks
      const BinaryMatrix& gi = g.coeff(i);
      for (int r = 0; r < g.k(); ++r)
        if (u.blocks[s].get(r)) gi.xor_row_into(r, acc);
    }
    c.blocks.push_back(std::move(acc));
  }
  return c;
}

int column_distance(const PolyGeneratorMatrix& g, int j) {
  if (j < 0) throw ParameterError("column_distance: j must be >= 0");
  const int k = g.k();
  if (static_cast<std::uint64_t>(k) * (j + 1) > 16)
    throw ResourceError("column_distance: enumeration infeasible");
  if (g.coeff(0).rank() != static_cast<std::size_t>(k))
    throw ParameterError("column_distance: G_0 must have full rank");

  const std::uint64_t block_space = std::uint64_t{1} << k;
  const std::uint64_t tail_space = std::uint64_t{1} << (k * j);
  int best = std::numeric_limits<int>::max();
  MessageSequence msg;
  msg.blocks.assign(j + 1, BinaryVector(k));
  for (std::uint64_t u0 = 1; u0 < block_space; ++u0) {
    for (std::uint64_t rest = 0; rest < tail_space; ++rest) {
      for (int r = 0; r < k; ++r) msg.blocks[0].set(r, (u0 >> (k - 1 - r)) & 1);
      for (int t = 1; t <= j; ++t) {
        const std::uint64_t ut = (rest >> (k * (t - 1))) & (block_space - 1);
        for (int r = 0; r < k; ++r) msg.blocks[t].set(r, (ut >> (k - 1 - r)) & 1);
      }
      const PolyCodeword c = encode(msg, g);
      int w = 0;
      for (int t = 0; t <= j; ++t) w += weight(c.blocks[t]);
      best = std::min(best, w);
    }
  }
  return best;
}

int free_distance_estimate(const PolyGeneratorMatrix& g, int window) {
  if (window < g.delta() / g.k())
    throw ParameterError("free_distance_estimate: window before the plateau");
  return column_distance(g, window);
}

int partial_simplex_column_distance(int k, int delta, int j) {
  if (k < 1 || delta < 1 || j < 0 || k + delta > 24)
    throw ParameterError("partial_simplex_column_distance: bad parameters");
  const int n = (1 << delta) * ((1 << k) - 1);
  const int base = 1 << (delta + k - 1);  // n * 2^(k-1) / (2^k - 1)
  return base + std::min(j, delta / k) * (n / 2);
}

std::vector<BipolarVector> to_bipolar_blocks(const PolyCodeword& c) {
  std::vector<BipolarVector> out;
  out.reserve(c.blocks.size());
  for (const BinaryVector& b : c.blocks) out.push_back(to_bipolar(b));
  return out;
}

}  // namespace pscc
