#include "pscc/hadamard.hpp"

#include <bit>
#include <mutex>

#include "pscc/block_codes.hpp"

namespace pscc {

namespace {
constexpr int kMaxHadamardOrder = 12;
constexpr int kMaxTupleBits = 16;
}  // namespace

PermutationMap::PermutationMap(std::vector<std::uint32_t> forward)
    : forward_(std::move(forward)) {
  std::vector<bool> seen(forward_.size(), false);
  for (std::uint32_t idx : forward_) {
    if (idx >= forward_.size() || seen[idx])
      throw ParameterError("PermutationMap: index array is not a bijection");
    seen[idx] = true;
  }
}

void SignedMatrix::set(std::size_t r, std::size_t c, int v) {
  if (v != 1 && v != -1) throw ParameterError("SignedMatrix: entries must be +-1");
  data_[r * cols_ + c] = static_cast<std::int8_t>(v);
}

std::vector<int> SignedMatrix::row(std::size_t r) const {
  std::vector<int> out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = get(r, c);
  return out;
}

std::string SignedMatrix::to_text() const {
  std::string out;
  out.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(get(r, c) > 0 ? '+' : '-');
    out.push_back('\n');
  }
  return out;
}

SignedMatrix hadamard_matrix(int m) {
  if (m < 0) throw ParameterError("hadamard_matrix: m must be >= 0");
  if (m > kMaxHadamardOrder)
    throw ResourceError("hadamard_matrix: materialization capped at m <= 12");
  SignedMatrix h(1, 1);
  for (int mm = 1; mm <= m; ++mm) {
    const std::size_t s = std::size_t{1} << (mm - 1);
    SignedMatrix next(2 * s, 2 * s);
    for (std::size_t r = 0; r < s; ++r)
      for (std::size_t c = 0; c < s; ++c) {
        const int v = h.get(r, c);
        next.set(r, c, v);
        next.set(r, c + s, v);
        next.set(r + s, c, v);
        next.set(r + s, c + s, -v);
      }
    h = next;
  }
  return h;
}

PermutationMap faro_out_shuffle(std::size_t len) {
  if (len < 2 || (len & 1)) throw ParameterError("faro_out_shuffle: length must be even");
  std::vector<std::uint32_t> forward(len);
  for (std::size_t i = 0; i < len / 2; ++i) {
    forward[2 * i] = static_cast<std::uint32_t>(i);
    forward[2 * i + 1] = static_cast<std::uint32_t>(len / 2 + i);
  }
  return PermutationMap(std::move(forward));
}

namespace {

// One shuffle + butterfly round per transform level, all at full length.
void fwht_rounds(std::vector<std::int32_t>& x,
                 const std::vector<std::uint32_t>& shuffle, int rounds,
                 OpCount* ops) {
  const std::size_t len = x.size();
  std::vector<std::int32_t> tmp(len);
  for (int r = 0; r < rounds; ++r) {
    for (std::size_t i = 0; i < len; ++i) tmp[i] = x[shuffle[i]];
    for (std::size_t t = 0; t < len; t += 2) {
      const std::int32_t a = tmp[t];
      const std::int32_t b = tmp[t + 1];
      x[t] = a + b;
      x[t + 1] = a - b;
    }
    if (ops) ops->additions += len;
  }
}

// The out-shuffle direction is ambiguous in the wild; pin it by checking the
// factored transform against the dense matrix for small sizes, once.
void ensure_shuffle_convention() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    for (int m = 1; m <= 6; ++m) {
      const std::size_t len = std::size_t{1} << m;
      const auto shuffle = faro_out_shuffle(len).forward();
      for (std::size_t j = 0; j < len; ++j) {
        std::vector<std::int32_t> x(len, 0);
        x[j] = 1;
        fwht_rounds(x, shuffle, m, nullptr);
        for (std::size_t i = 0; i < len; ++i) {
          const int expected = (std::popcount(i & j) & 1) ? -1 : 1;
          if (x[i] != expected)
            throw std::logic_error("fwht: shuffle convention check failed");
        }
      }
    }
  });
}

}  // namespace

std::vector<std::int32_t> fwht(std::vector<std::int32_t> x, OpCount* ops) {
  if (x.empty() || (x.size() & (x.size() - 1)))
    throw ParameterError("fwht: length must be a power of two");
  if (x.size() == 1) return x;
  ensure_shuffle_convention();
  const int m = std::countr_zero(x.size());
  const auto shuffle = faro_out_shuffle(x.size()).forward();
  fwht_rounds(x, shuffle, m, ops);
  return x;
}

PermutationMap build_T(int k, int delta, int l) {
  if (k < 1 || delta < 1) throw ParameterError("build_T: k and delta must be >= 1");
  if (l < 1 || l > k - 1) throw ParameterError("build_T: l must be in [1, k-1]");
  if (k + delta - 1 > kMaxTupleBits) throw ResourceError("build_T: size too large");
  const std::size_t len = std::size_t{1} << (k + delta - 1);
  const std::size_t stride = std::size_t{1} << (k + delta - l - 1);
  const std::size_t copies = std::size_t{1} << l;
  std::vector<std::uint32_t> forward(len);
  for (std::size_t j = 0; j < stride; ++j)
    for (std::size_t c = 0; c < copies; ++c)
      forward[(j << l) + c] = static_cast<std::uint32_t>(c * stride + j);
  return PermutationMap(std::move(forward));
}

SignedMatrix build_Hhat(int k, int delta, int l) {
  const PermutationMap t = build_T(k, delta, l);
  const SignedMatrix base = hadamard_matrix(k + delta - l - 1);
  const std::size_t rows = std::size_t{1} << (k + delta - 1);
  const std::size_t half_copies = std::size_t{1} << (l - 1);
  SignedMatrix out(rows, base.cols());
  for (std::size_t p = 0; p < rows; ++p) {
    const std::size_t src = t[p];
    const std::size_t copy = src / base.rows();
    const std::size_t base_row = src % base.rows();
    const int sign = copy < half_copies ? -1 : 1;
    for (std::size_t c = 0; c < base.cols(); ++c)
      out.set(p, c, sign * base.get(base_row, c));
  }
  return out;
}

SignedMatrix build_Htilde(int k, int delta) {
  if (k < 1 || delta < 1)
    throw ParameterError("build_Htilde: k and delta must be >= 1");
  const int m = k + delta - 1;
  if (m > kMaxHadamardOrder) throw ResourceError("build_Htilde: size too large");
  const std::size_t half = std::size_t{1} << m;
  const std::size_t cols = (std::size_t{1} << (m + 1)) - (std::size_t{1} << delta);
  SignedMatrix out(2 * half, cols);
  const SignedMatrix h = hadamard_matrix(m);
  for (std::size_t r = 0; r < half; ++r)
    for (std::size_t c = 0; c < half; ++c) {
      out.set(r, c, h.get(r, c));
      out.set(r + half, c, -h.get(r, c));
    }
  std::size_t off = half;
  for (int l = 1; l < k; ++l) {
    const SignedMatrix hat = build_Hhat(k, delta, l);
    for (std::size_t r = 0; r < half; ++r)
      for (std::size_t c = 0; c < hat.cols(); ++c) {
        out.set(r, off + c, hat.get(r, c));
        out.set(r + half, off + c, hat.get(r, c));
      }
    off += hat.cols();
  }
  return out;
}

PermutationMap build_Q(int k, int delta) {
  if (k < 1 || delta < 1) throw ParameterError("build_Q: k and delta must be >= 1");
  const int dim = k + delta;
  if (dim > kMaxTupleBits) throw ResourceError("build_Q: size too large");
  // Enumeration combos depend only on the dimension, not the generator.
  std::vector<std::vector<int>> combos;
  combos.reserve(std::size_t{1} << dim);
  combos.push_back({1});
  for (int i = 2; i <= dim; ++i) {
    const std::size_t sz = combos.size();
    for (std::size_t t = 0; t < sz; ++t) {
      std::vector<int> c = combos[t];
      c.push_back(i);
      combos.push_back(std::move(c));
    }
  }
  const std::size_t half = combos.size();
  std::vector<std::uint32_t> forward(2 * half);
  for (std::size_t i = 0; i < half; ++i)
    forward[i] = static_cast<std::uint32_t>(combo_lex_rank(combos[i], dim) - 1);
  for (std::size_t i = 0; i < half; ++i)
    forward[half + i] = forward[i] - static_cast<std::uint32_t>(half);
  return PermutationMap(std::move(forward));
}

DistanceProfiler::DistanceProfiler(int k, int delta) : k_(k), delta_(delta) {
  if (k < 1 || delta < 1)
    throw ParameterError("DistanceProfiler: k and delta must be >= 1");
  if (k + delta > kMaxTupleBits)
    throw ResourceError("DistanceProfiler: state space too large");
  m_ = k + delta - 1;
  n_ = static_cast<int>((std::size_t{1} << (k + delta)) - (std::size_t{1} << delta));
  q_ = build_Q(k, delta).forward();
  ensure_shuffle_convention();
  shuffles_.resize(k);
  for (int l = 0; l < k; ++l)
    shuffles_[l] = faro_out_shuffle(std::size_t{1} << (m_ - l)).forward();
  hats_.resize(k > 1 ? k - 1 : 0);
  const std::size_t half = std::size_t{1} << m_;
  for (int l = 1; l < k; ++l) {
    const PermutationMap t = build_T(k, delta, l);
    const std::size_t part = std::size_t{1} << (m_ - l);
    const std::size_t half_copies = std::size_t{1} << (l - 1);
    HatExpansion& hat = hats_[l - 1];
    hat.src.resize(half);
    hat.sign.resize(half);
    for (std::size_t p = 0; p < half; ++p) {
      const std::size_t src = t[p];
      hat.src[p] = static_cast<std::uint32_t>(src % part);
      hat.sign[p] = (src / part) < half_copies ? -1 : 1;
    }
  }
}

DistanceProfile DistanceProfiler::profile(const BipolarVector& received,
                                          OpCount* ops) const {
  if (static_cast<int>(received.size()) != n_)
    throw DimensionError("DistanceProfiler::profile: block length mismatch");
  const std::size_t half = std::size_t{1} << m_;

  // Transform each part r^(m), r^(m-1), ..., r^(delta) separately.
  std::vector<std::int32_t> w0(half);
  for (std::size_t i = 0; i < half; ++i) w0[i] = received[i];
  fwht_rounds(w0, shuffles_[0], m_, ops);

  std::vector<std::int32_t> acc;
  std::size_t off = half;
  for (int l = 1; l < k_; ++l) {
    const std::size_t part = std::size_t{1} << (m_ - l);
    std::vector<std::int32_t> v(part);
    for (std::size_t i = 0; i < part; ++i) v[i] = received[off + i];
    fwht_rounds(v, shuffles_[l], m_ - l, ops);
    off += part;
    const HatExpansion& hat = hats_[l - 1];
    if (acc.empty()) {
      acc.resize(half);
      for (std::size_t p = 0; p < half; ++p) acc[p] = hat.sign[p] * v[hat.src[p]];
    } else {
      for (std::size_t p = 0; p < half; ++p) acc[p] += hat.sign[p] * v[hat.src[p]];
      if (ops) ops->additions += half;
    }
  }

  // Assemble Htilde * r^T: the transformed first part flips sign between the
  // halves, the Hhat contributions are shared.
  std::vector<std::int32_t> pre(2 * half);
  if (acc.empty()) {
    for (std::size_t p = 0; p < half; ++p) {
      pre[p] = w0[p];
      pre[half + p] = -w0[p];
    }
  } else {
    for (std::size_t p = 0; p < half; ++p) {
      pre[p] = w0[p] + acc[p];
      pre[half + p] = acc[p] - w0[p];
    }
    if (ops) ops->additions += 2 * half;
  }

  DistanceProfile out;
  out.metrics.resize(2 * half);
  for (std::size_t i = 0; i < 2 * half; ++i) {
    const std::int32_t ip = pre[q_[i]];
    assert(ip <= n_ && ip >= -n_ && ((n_ - ip) & 1) == 0);
    out.metrics[i] = (n_ - ip) / 2;
  }
  if (ops) ops->additions += 2 * half;
  return out;
}

DistanceProfile branch_distance_profile(const BipolarVector& r, int k, int delta,
                                        OpCount* ops) {
  return DistanceProfiler(k, delta).profile(r, ops);
}

}  // namespace pscc
