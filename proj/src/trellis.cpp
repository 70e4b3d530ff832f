#include "pscc/trellis.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace pscc {

TrellisConfig TrellisConfig::from(const PolyGeneratorMatrix& g) {
  // 2^(delta+k) edge labels of n bits each get materialized up front
  if (g.delta() + g.k() > 14)
    throw ResourceError("TrellisConfig: state space too large");
  TrellisConfig cfg;
  cfg.k = g.k();
  cfg.delta = g.delta();
  cfg.mu = g.mu();
  cfg.n = g.n();
  cfg.state_count = std::uint32_t{1} << cfg.delta;
  cfg.tuple_count = std::uint32_t{1} << (cfg.delta + cfg.k);
  return cfg;
}

SurvivorTable::SurvivorTable(TrellisConfig cfg, BinaryMatrix stacked, int block_count)
    : cfg_(cfg), stacked_(std::move(stacked)), block_count_(block_count),
      entries_(static_cast<std::size_t>(block_count + 1) * cfg.state_count) {
  entry(0, 0) = {0, -1, 0, true};
}

namespace {

// All 2^(delta+k) edge labels; tuple bit (delta+k-1-r) selects row r of the
// stacked generator. Built incrementally off the lowest set bit.
std::vector<BinaryVector> all_branch_outputs(const BinaryMatrix& stacked,
                                             const TrellisConfig& cfg) {
  const int bits = cfg.delta + cfg.k;
  std::vector<BinaryVector> out(cfg.tuple_count);
  out[0] = BinaryVector(cfg.n);
  for (std::uint32_t tuple = 1; tuple < cfg.tuple_count; ++tuple) {
    const int b = std::countr_zero(tuple);
    BinaryVector v = out[tuple & (tuple - 1)];
    stacked.xor_row_into(bits - 1 - b, v);
    out[tuple] = std::move(v);
  }
  return out;
}

// Relax every edge into time column t, in ascending branch-tuple order so
// that the lowest-rank tie rule falls out of iteration order. When the input
// is forced to zero (termination region) the admissible tuples are exactly
// those below 2^delta.
template <typename BranchMetric>
void relax_column(SurvivorTable& tab, int t, bool free_input, BranchMetric&& bm,
                  const TieRule& tie, std::mt19937_64& rng,
                  std::vector<std::uint32_t>& tie_count, OpCount& ops) {
  const TrellisConfig& cfg = tab.config();
  std::fill(tie_count.begin(), tie_count.end(), 0u);
  const std::uint32_t limit = free_input ? cfg.tuple_count : cfg.state_count;
  for (std::uint32_t tuple = 0; tuple < limit; ++tuple) {
    const std::uint32_t prev_state = tuple & (cfg.state_count - 1);
    const SurvivorEntry& prev = tab.entry(t - 1, prev_state);
    if (!prev.active) continue;
    const std::int64_t metric = prev.metric + bm(tuple);
    ++ops.additions;
    const std::uint32_t next_state = tuple >> cfg.k;
    const std::uint32_t input = tuple >> cfg.delta;
    SurvivorEntry& cur = tab.entry(t, next_state);
    if (!cur.active) {
      cur = {metric, static_cast<std::int32_t>(prev_state), input, true};
      tie_count[next_state] = 1;
    } else {
      ++ops.comparisons;
      if (metric < cur.metric) {
        cur = {metric, static_cast<std::int32_t>(prev_state), input, true};
        tie_count[next_state] = 1;
      } else if (metric == cur.metric) {
        ++tie_count[next_state];
        if (tie.kind == TieRule::Kind::seeded_random &&
            rng() % tie_count[next_state] == 0)
          cur = {metric, static_cast<std::int32_t>(prev_state), input, true};
      }
    }
  }
}

void validate_received(std::size_t blocks, std::size_t block_len,
                       const TrellisConfig& cfg) {
  if (static_cast<int>(blocks) < cfg.mu + 1)
    throw DimensionError("decode: need at least mu + 1 received blocks");
  if (static_cast<int>(block_len) != cfg.n)
    throw DimensionError("decode: received block length must be n");
}

}  // namespace

BinaryVector branch_output(std::uint32_t state, std::uint32_t input,
                           const PolyGeneratorMatrix& g) {
  const int bits = g.delta() + g.k();
  if (state >> g.delta() || input >> g.k())
    throw ParameterError("branch_output: state or input out of range");
  const std::uint32_t tuple = (input << g.delta()) | state;
  BinaryVector v(g.n());
  for (int r = 0; r < bits; ++r)
    if ((tuple >> (bits - 1 - r)) & 1) g.stacked().xor_row_into(r, v);
  return v;
}

SurvivorTable viterbi_forward(const PolyCodeword& received,
                              const PolyGeneratorMatrix& g, TieRule tie) {
  const TrellisConfig cfg = TrellisConfig::from(g);
  if (received.blocks.empty())
    throw DimensionError("decode: no received blocks");
  for (const BinaryVector& b : received.blocks)
    validate_received(received.blocks.size(), b.size(), cfg);

  const int block_count = static_cast<int>(received.blocks.size());  // N + 1
  const int message_count = block_count - cfg.mu;                    // L
  const auto outputs = all_branch_outputs(g.stacked(), cfg);
  SurvivorTable tab(cfg, g.stacked(), block_count);
  std::mt19937_64 rng(tie.seed);
  std::vector<std::uint32_t> tie_count(cfg.state_count);

  for (int t = 1; t <= block_count; ++t) {
    const BinaryVector& rb = received.blocks[t - 1];
    auto bm = [&](std::uint32_t tuple) {
      tab.ops.additions += cfg.n;  // n-bit comparison against the edge label
      return hamming_distance(rb, outputs[tuple]);
    };
    const bool steady = t >= cfg.mu + 1 && t <= block_count - cfg.mu;
    const OpCount before = tab.ops;
    relax_column(tab, t, t <= message_count, bm, tie, rng, tie_count, tab.ops);
    if (steady) {
      tab.steady_ops += tab.ops - before;
      ++tab.steady_steps;
    }
  }
  return tab;
}

SurvivorTable improved_viterbi_forward(const std::vector<BipolarVector>& received,
                                       const PolyGeneratorMatrix& g, TieRule tie) {
  if (!g.is_partial_simplex())
    throw ParameterError(
        "improved_viterbi_decode: generator is not a k-partial simplex matrix");
  const TrellisConfig cfg = TrellisConfig::from(g);
  if (received.empty()) throw DimensionError("decode: no received blocks");
  for (const BipolarVector& b : received)
    validate_received(received.size(), b.size(), cfg);

  const int block_count = static_cast<int>(received.size());
  const int message_count = block_count - cfg.mu;
  const DistanceProfiler profiler(cfg.k, cfg.delta);
  const auto outputs = all_branch_outputs(g.stacked(), cfg);
  std::vector<BinaryVector> hard;
  hard.reserve(received.size());
  for (const BipolarVector& b : received) hard.push_back(from_bipolar(b));

  SurvivorTable tab(cfg, g.stacked(), block_count);
  std::mt19937_64 rng(tie.seed);
  std::vector<std::uint32_t> tie_count(cfg.state_count);

  for (int t = 1; t <= block_count; ++t) {
    const bool steady = t >= cfg.mu + 1 && t <= block_count - cfg.mu;
    const OpCount before = tab.ops;
    if (steady) {
      // One fast profile gives every branch metric; edges then read it by
      // tuple rank in O(1).
      const DistanceProfile profile =
          profiler.profile(received[t - 1], &tab.ops);
      auto bm = [&](std::uint32_t tuple) { return profile.metrics[tuple]; };
      relax_column(tab, t, true, bm, tie, rng, tie_count, tab.ops);
      tab.steady_ops += tab.ops - before;
      ++tab.steady_steps;
    } else {
      const BinaryVector& rb = hard[t - 1];
      auto bm = [&](std::uint32_t tuple) {
        tab.ops.additions += cfg.n;
        return hamming_distance(rb, outputs[tuple]);
      };
      relax_column(tab, t, t <= message_count, bm, tie, rng, tie_count, tab.ops);
    }
  }
  return tab;
}

DecodeResult traceback(const SurvivorTable& table) {
  const TrellisConfig& cfg = table.config();
  const int block_count = table.block_count();
  if (!table.entry(block_count, 0).active)
    throw std::logic_error("traceback: no surviving path into the zero state");

  DecodeResult out;
  out.metric = table.entry(block_count, 0).metric;
  out.ops = table.ops;
  out.steady_ops = table.steady_ops;
  out.steady_steps = table.steady_steps;
  out.codeword.blocks.assign(block_count, BinaryVector());

  std::vector<std::uint32_t> inputs(block_count);
  std::uint32_t state = 0;
  for (int t = block_count; t >= 1; --t) {
    const SurvivorEntry& e = table.entry(t, state);
    inputs[t - 1] = e.input;
    const std::uint32_t tuple =
        (e.input << cfg.delta) | static_cast<std::uint32_t>(e.predecessor);
    BinaryVector v(cfg.n);
    const int bits = cfg.delta + cfg.k;
    for (int r = 0; r < bits; ++r)
      if ((tuple >> (bits - 1 - r)) & 1) table.stacked().xor_row_into(r, v);
    out.codeword.blocks[t - 1] = std::move(v);
    state = static_cast<std::uint32_t>(e.predecessor);
  }

  const int message_count = table.message_blocks();
  out.message.blocks.reserve(message_count);
  for (int t = 0; t < message_count; ++t) {
    BinaryVector u(cfg.k);
    for (int r = 0; r < cfg.k; ++r) u.set(r, (inputs[t] >> (cfg.k - 1 - r)) & 1);
    out.message.blocks.push_back(std::move(u));
  }
  return out;
}

DecodeResult viterbi_decode(const PolyCodeword& received,
                            const PolyGeneratorMatrix& g, TieRule tie) {
  return traceback(viterbi_forward(received, g, tie));
}

DecodeResult improved_viterbi_decode(const std::vector<BipolarVector>& received,
                                     const PolyGeneratorMatrix& g, TieRule tie) {
  return traceback(improved_viterbi_forward(received, g, tie));
}

}  // namespace pscc
