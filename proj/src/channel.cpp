#include "pscc/channel.hpp"

#include <random>

namespace pscc {

PolyCodeword bsc_transmit(const PolyCodeword& c, const ChannelConfig& cfg) {
  const double p = cfg.flip_probability;
  if (p < 0.0 || p > 1.0)
    throw ParameterError("bsc_transmit: flip probability must be in [0, 1]");
  PolyCodeword out = c;
  if (p <= 0.0) return out;
  if (p >= 1.0) {
    for (BinaryVector& b : out.blocks)
      for (std::size_t i = 0; i < b.size(); ++i) b.flip(i);
    return out;
  }
  std::mt19937_64 rng(cfg.seed);
  const auto threshold =
      static_cast<std::uint64_t>(p * 18446744073709551616.0L);  // p * 2^64
  for (BinaryVector& b : out.blocks)
    for (std::size_t i = 0; i < b.size(); ++i)
      if (rng() < threshold) b.flip(i);
  return out;
}

PolyCodeword inject_errors(const PolyCodeword& c,
                           std::span<const std::size_t> bit_positions) {
  PolyCodeword out = c;
  for (std::size_t pos : bit_positions) {
    std::size_t remaining = pos;
    std::size_t t = 0;
    while (t < out.blocks.size() && remaining >= out.blocks[t].size()) {
      remaining -= out.blocks[t].size();
      ++t;
    }
    if (t >= out.blocks.size())
      throw DimensionError("inject_errors: bit position out of range");
    out.blocks[t].flip(remaining);
  }
  return out;
}

}  // namespace pscc
