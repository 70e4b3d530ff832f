#pragma once

#include <cstdint>

namespace pscc {

// Tally of metric arithmetic in the cost model used throughout: additions
// cover integer adds/subtracts and per-bit distance accumulation, comparisons
// cover survivor selection.
struct OpCount {
  std::uint64_t additions = 0;
  std::uint64_t comparisons = 0;

  OpCount& operator+=(const OpCount& o) {
    additions += o.additions;
    comparisons += o.comparisons;
    return *this;
  }
  friend OpCount operator+(OpCount a, const OpCount& b) { return a += b; }
  friend OpCount operator-(OpCount a, const OpCount& b) {
    a.additions -= b.additions;
    a.comparisons -= b.comparisons;
    return a;
  }
  friend bool operator==(const OpCount&, const OpCount&) = default;
};

}  // namespace pscc
