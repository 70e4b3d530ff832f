#pragma once

#include <cstdint>
#include <span>

#include "pscc/convolutional.hpp"

namespace pscc {

// Memoryless binary symmetric channel. Flips are drawn from mt19937_64 by
// threshold sampling so that runs are bit-identical across platforms for a
// given seed.
struct ChannelConfig {
  double flip_probability = 0.0;
  std::uint64_t seed = 0;
};

PolyCodeword bsc_transmit(const PolyCodeword& c, const ChannelConfig& cfg);

// Flips exactly the listed bits; positions are flat indices t * n + i.
PolyCodeword inject_errors(const PolyCodeword& c,
                           std::span<const std::size_t> bit_positions);

}  // namespace pscc
