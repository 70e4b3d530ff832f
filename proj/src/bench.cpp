#include "pscc/bench.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "pscc/channel.hpp"
#include "pscc/trellis.hpp"

namespace pscc {

namespace {

struct TrialTally {
  OpCount classic_ops, improved_ops;
  OpCount classic_steady, improved_steady;
  std::uint64_t classic_steady_steps = 0, improved_steady_steps = 0;
  std::uint64_t classic_ns = 0, improved_ns = 0;
  std::uint64_t classic_block_errors = 0, improved_block_errors = 0;
  std::uint64_t classic_bit_errors = 0, improved_bit_errors = 0;
  std::uint64_t mismatches = 0;

  TrialTally& operator+=(const TrialTally& o) {
    classic_ops += o.classic_ops;
    improved_ops += o.improved_ops;
    classic_steady += o.classic_steady;
    improved_steady += o.improved_steady;
    classic_steady_steps += o.classic_steady_steps;
    improved_steady_steps += o.improved_steady_steps;
    classic_ns += o.classic_ns;
    improved_ns += o.improved_ns;
    classic_block_errors += o.classic_block_errors;
    improved_block_errors += o.improved_block_errors;
    classic_bit_errors += o.classic_bit_errors;
    improved_bit_errors += o.improved_bit_errors;
    mismatches += o.mismatches;
    return *this;
  }
};

std::uint64_t message_bit_errors(const MessageSequence& sent,
                                 const MessageSequence& got) {
  std::uint64_t errs = 0;
  for (std::size_t t = 0; t < sent.blocks.size(); ++t)
    errs += hamming_distance(sent.blocks[t], got.blocks[t]);
  return errs;
}

TrialTally run_trial(const PolyGeneratorMatrix& g, int L, double p,
                     std::uint64_t seed, std::uint64_t trial) {
  using clock = std::chrono::steady_clock;
  std::mt19937_64 rng(seed ^ trial);
  MessageSequence msg;
  msg.blocks.reserve(L);
  for (int t = 0; t < L; ++t) {
    BinaryVector b(g.k());
    for (int r = 0; r < g.k(); ++r) b.set(r, rng() & 1);
    msg.blocks.push_back(std::move(b));
  }
  const std::uint64_t channel_seed = rng();

  const PolyCodeword sent = encode(msg, g);
  const PolyCodeword received = bsc_transmit(sent, {p, channel_seed});

  TrialTally tally;
  const auto t0 = clock::now();
  const DecodeResult classic = viterbi_decode(received, g);
  const auto t1 = clock::now();
  const DecodeResult improved =
      improved_viterbi_decode(to_bipolar_blocks(received), g);
  const auto t2 = clock::now();

  tally.classic_ns =
      std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
  tally.improved_ns =
      std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count();
  tally.classic_ops = classic.ops;
  tally.improved_ops = improved.ops;
  tally.classic_steady = classic.steady_ops;
  tally.improved_steady = improved.steady_ops;
  tally.classic_steady_steps = classic.steady_steps;
  tally.improved_steady_steps = improved.steady_steps;

  if (classic.metric != improved.metric || classic.message != improved.message ||
      classic.codeword != improved.codeword)
    tally.mismatches = 1;

  const std::uint64_t classic_errs = message_bit_errors(msg, classic.message);
  const std::uint64_t improved_errs = message_bit_errors(msg, improved.message);
  tally.classic_bit_errors = classic_errs;
  tally.improved_bit_errors = improved_errs;
  tally.classic_block_errors = classic_errs ? 1 : 0;
  tally.improved_block_errors = improved_errs ? 1 : 0;
  return tally;
}

}  // namespace

BenchReport run_bench(int k, int delta, int L, std::uint64_t trials, double p,
                      std::uint64_t seed, int threads) {
  if (L < 1) throw ParameterError("run_bench: L must be >= 1");
  if (trials < 1) throw ParameterError("run_bench: trials must be >= 1");
  if (p < 0.0 || p > 1.0) throw ParameterError("run_bench: p must be in [0, 1]");
  const PolyGeneratorMatrix g = PolyGeneratorMatrix::partial_simplex(k, delta);
  TrellisConfig::from(g);  // feasibility check on the caller thread

  int nthreads = threads;
  if (nthreads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    nthreads = static_cast<int>(hw ? (hw > 8 ? 8 : hw) : 1);
  }
  if (static_cast<std::uint64_t>(nthreads) > trials)
    nthreads = static_cast<int>(trials);

  std::vector<TrialTally> partial(nthreads);
  std::vector<std::exception_ptr> errors(nthreads);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (int w = 0; w < nthreads; ++w) {
    pool.emplace_back([&, w] {
      try {
        TrialTally local;
        for (std::uint64_t trial = w; trial < trials; trial += nthreads)
          local += run_trial(g, L, p, seed, trial);
        partial[w] = local;
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& th : pool) th.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
  TrialTally total;
  for (const TrialTally& t : partial) total += t;

  BenchReport report;
  report.k = k;
  report.delta = delta;
  report.n = g.n();
  report.L = L;
  report.N = L + g.mu() - 1;
  report.trials = trials;
  report.p = p;
  report.seed = seed;
  report.metric_mismatches = total.mismatches;

  const double message_bits = static_cast<double>(trials) * L * k;
  report.classic = {"classic",
                    total.classic_ops.additions,
                    total.classic_ops.comparisons,
                    total.classic_ns,
                    static_cast<double>(total.classic_block_errors) / trials,
                    static_cast<double>(total.classic_bit_errors) / message_bits,
                    total.classic_steady.additions,
                    total.classic_steady.comparisons,
                    total.classic_steady_steps};
  report.improved = {"improved",
                     total.improved_ops.additions,
                     total.improved_ops.comparisons,
                     total.improved_ns,
                     static_cast<double>(total.improved_block_errors) / trials,
                     static_cast<double>(total.improved_bit_errors) / message_bits,
                     total.improved_steady.additions,
                     total.improved_steady.comparisons,
                     total.improved_steady_steps};
  return report;
}

std::string bench_report_json(const BenchReport& report) {
  nlohmann::json decoders = nlohmann::json::array();
  for (const DecoderStats* s : {&report.classic, &report.improved}) {
    decoders.push_back({{"decoder", s->name},
                        {"additions", s->additions},
                        {"comparisons", s->comparisons},
                        {"wall_ns", s->wall_ns},
                        {"bler", s->bler},
                        {"ber", s->ber},
                        {"steady_additions", s->steady_additions},
                        {"steady_comparisons", s->steady_comparisons},
                        {"steady_steps", s->steady_steps},
                        {"adds_per_step", s->adds_per_step()},
                        {"cmps_per_step", s->cmps_per_step()}});
  }
  const nlohmann::json j = {
      {"params",
       {{"k", report.k},
        {"delta", report.delta},
        {"n", report.n},
        {"N", report.N},
        {"L", report.L},
        {"trials", report.trials},
        {"p", report.p},
        {"seed", report.seed},
        {"rng", report.rng},
        {"metric_mismatches", report.metric_mismatches}}},
      {"decoders", decoders}};
  return j.dump(2) + "\n";
}

std::string bench_report_csv(const BenchReport& report, bool header) {
  std::ostringstream out;
  if (header)
    out << "k,delta,n,N,L,trials,p,seed,decoder,additions,comparisons,"
           "wall_ns,bler,ber,adds_per_step,cmps_per_step\n";
  for (const DecoderStats* s : {&report.classic, &report.improved}) {
    out << report.k << ',' << report.delta << ',' << report.n << ',' << report.N
        << ',' << report.L << ',' << report.trials << ',' << report.p << ','
        << report.seed << ',' << s->name << ',' << s->additions << ','
        << s->comparisons << ',' << s->wall_ns << ',' << s->bler << ','
        << s->ber << ',' << s->adds_per_step() << ',' << s->cmps_per_step()
        << '\n';
  }
  return out.str();
}

}  // namespace pscc
