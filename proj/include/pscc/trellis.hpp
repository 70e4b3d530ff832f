#pragma once

#include <cstdint>
#include <vector>

#include "pscc/convolutional.hpp"
#include "pscc/hadamard.hpp"
#include "pscc/opcount.hpp"

namespace pscc {

// Survivor selection among equal metrics. The default keeps the incoming
// branch with the smallest lexicographic (input, state) tuple, which makes
// both decoders bit-for-bit comparable; the seeded rule picks uniformly
// among ties for experiments.
struct TieRule {
  enum class Kind { lowest_branch_rank, seeded_random };
  Kind kind = Kind::lowest_branch_rank;
  std::uint64_t seed = 0;

  static TieRule lowest_branch_rank() { return {}; }
  static TieRule seeded_random(std::uint64_t seed) {
    return {Kind::seeded_random, seed};
  }
};

// States carry the effective delta bits of encoder history
// (u_{t-1}, ..., and the leading bits of the oldest block), most recent
// input first. A branch tuple is the k input bits followed by the delta
// state bits of the predecessor; the successor state is the tuple's top
// delta bits.
struct TrellisConfig {
  int k = 0, delta = 0, mu = 0, n = 0;
  std::uint32_t state_count = 0;  // 2^delta
  std::uint32_t tuple_count = 0;  // 2^(delta+k)

  static TrellisConfig from(const PolyGeneratorMatrix& g);
};

struct SurvivorEntry {
  std::int64_t metric = 0;
  std::int32_t predecessor = -1;
  std::uint32_t input = 0;
  bool active = false;
};

// Per-time, per-state survivor record from a forward pass, together with
// everything traceback needs to rebuild the path.
class SurvivorTable {
 public:
  SurvivorTable(TrellisConfig cfg, BinaryMatrix stacked, int block_count);

  const TrellisConfig& config() const { return cfg_; }
  int block_count() const { return block_count_; }          // N + 1
  int message_blocks() const { return block_count_ - cfg_.mu; }
  const BinaryMatrix& stacked() const { return stacked_; }

  const SurvivorEntry& entry(int t, std::uint32_t state) const {
    return entries_[static_cast<std::size_t>(t) * cfg_.state_count + state];
  }
  SurvivorEntry& entry(int t, std::uint32_t state) {
    return entries_[static_cast<std::size_t>(t) * cfg_.state_count + state];
  }

  OpCount ops;
  // Ops and step count restricted to the full-width middle of the trellis,
  // where per-step cost is data independent; this is what the complexity
  // comparison reads.
  OpCount steady_ops;
  int steady_steps = 0;

 private:
  TrellisConfig cfg_;
  BinaryMatrix stacked_;
  int block_count_;
  std::vector<SurvivorEntry> entries_;
};

struct DecodeResult {
  PolyCodeword codeword;
  MessageSequence message;  // the L message blocks, tail excluded
  std::int64_t metric = 0;
  OpCount ops;
  OpCount steady_ops;
  int steady_steps = 0;
};

// Output block labelling the trellis edge (state, input): the branch tuple
// applied to the stacked generator. Missing history at early times is
// represented by zero state bits, so this covers head edges too.
BinaryVector branch_output(std::uint32_t state, std::uint32_t input,
                           const PolyGeneratorMatrix& g);

SurvivorTable viterbi_forward(const PolyCodeword& received,
                              const PolyGeneratorMatrix& g, TieRule tie = {});

SurvivorTable improved_viterbi_forward(const std::vector<BipolarVector>& received,
                                       const PolyGeneratorMatrix& g,
                                       TieRule tie = {});

// Walks the survivor predecessors from the zero terminal state back to t=0.
DecodeResult traceback(const SurvivorTable& table);

DecodeResult viterbi_decode(const PolyCodeword& received,
                            const PolyGeneratorMatrix& g, TieRule tie = {});

// Same result as viterbi_decode under the same tie rule; the full-width
// middle steps get all branch metrics at once from a DistanceProfiler
// instead of comparing n bits per branch.
DecodeResult improved_viterbi_decode(const std::vector<BipolarVector>& received,
                                     const PolyGeneratorMatrix& g,
                                     TieRule tie = {});

}  // namespace pscc
