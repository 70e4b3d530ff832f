#pragma once

#include <cstdint>
#include <string>

#include "pscc/opcount.hpp"

namespace pscc {

struct DecoderStats {
  std::string name;
  std::uint64_t additions = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t wall_ns = 0;
  double bler = 0.0;  // fraction of trials with any message-block error
  double ber = 0.0;   // fraction of wrong message bits
  std::uint64_t steady_additions = 0;
  std::uint64_t steady_comparisons = 0;
  std::uint64_t steady_steps = 0;

  double adds_per_step() const {
    return steady_steps ? static_cast<double>(steady_additions) / steady_steps : 0.0;
  }
  double cmps_per_step() const {
    return steady_steps ? static_cast<double>(steady_comparisons) / steady_steps : 0.0;
  }
};

// Aggregate of running both decoders over the same seeded channel trials.
// All fields except wall_ns are bit-identical given the same seed.
struct BenchReport {
  int k = 0, delta = 0, n = 0, N = 0, L = 0;
  std::uint64_t trials = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t metric_mismatches = 0;  // decoders disagreeing (must be 0)
  std::string rng = "mt19937_64(seed ^ trial), threshold sampling";
  DecoderStats classic;
  DecoderStats improved;
};

// Encodes random messages, pushes them through the channel, decodes with
// both algorithms, and tallies operation counts and error statistics.
// Trials run in parallel chunks with per-trial derived seeds; aggregation is
// a sum, so the report does not depend on the thread count.
BenchReport run_bench(int k, int delta, int L, std::uint64_t trials, double p,
                      std::uint64_t seed, int threads = 0);

std::string bench_report_json(const BenchReport& report);
std::string bench_report_csv(const BenchReport& report, bool header = true);

}  // namespace pscc
