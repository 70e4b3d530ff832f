// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries a wall-clock budget that is enforced.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "helpers.hpp"
#include "pscc/bench.hpp"
#include "pscc/channel.hpp"
#include "pscc/trellis.hpp"

using namespace pscc;

namespace {

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<void(std::ostream&)> run;  // throws on failure
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define REQUIRE_TRUE(cond)                                               \
  do {                                                                   \
    if (!(cond)) throw Failure(std::string("check failed: ") + #cond);   \
  } while (0)

template <typename A, typename B>
void require_eq(const A& a, const B& b, const std::string& what) {
  if (!(a == b)) {
    std::ostringstream msg;
    msg << what << ": got " << a << ", expected " << b;
    throw Failure(msg.str());
  }
}

MessageSequence message_from_bits(std::initializer_list<int> bits) {
  MessageSequence m;
  for (int b : bits) m.blocks.push_back(BinaryVector::from_bits({b}));
  return m;
}

// ---- criterion 1: reference trellis decode ------------------------------

void criterion_trellis(std::ostream&) {
  const auto g = PolyGeneratorMatrix::partial_simplex(1, 2);
  const MessageSequence msg = message_from_bits({1, 0, 1, 1});
  const PolyCodeword sent = encode(msg, g);
  const std::size_t flips[] = {2 * 4 + 0, 4 * 4 + 0, 4 * 4 + 3};
  const PolyCodeword received = inject_errors(sent, flips);

  const SurvivorTable tab = viterbi_forward(received, g);
  const std::int64_t at_t2[] = {6, 0, 6, 4};
  const std::int64_t at_t3[] = {3, 5, 1, 7};
  for (std::uint32_t s = 0; s < 4; ++s) {
    require_eq(tab.entry(2, s).metric, at_t2[s], "state metric at t=2");
    require_eq(tab.entry(3, s).metric, at_t3[s], "survivor metric at t=3");
  }

  const DecodeResult r = traceback(tab);
  const std::vector<std::string> codeword = {"1111", "0101", "1100",
                                             "1010", "0110", "0011"};
  for (std::size_t t = 0; t < codeword.size(); ++t)
    require_eq(r.codeword.blocks[t].to_string(), codeword[t], "codeword block");
  REQUIRE_TRUE(r.message == msg);
  require_eq(r.metric, std::int64_t{3}, "decode metric");
  require_eq(testutil::exhaustive_best_metric(g, received), std::int64_t{3},
             "exhaustive ML metric");
}

// ---- criterion 2: fast-profile worked example ---------------------------

void criterion_profile_example(std::ostream&) {
  const std::vector<std::int32_t> w = fwht({-1, 1, -1, -1});
  require_eq(w == std::vector<std::int32_t>{-2, -2, 2, -2}, true, "fwht value");

  const PermutationMap q = build_Q(1, 2);
  require_eq(q.forward() == std::vector<std::uint32_t>{4, 6, 5, 7, 0, 2, 1, 3},
             true, "Q rows (e5 e7 e6 e8 e1 e3 e2 e4)");

  // Q * Htilde * r^T
  const SignedMatrix ht = build_Htilde(1, 2);
  std::vector<std::int32_t> prod(8, 0);
  const std::int32_t r2[] = {-1, 1, -1, -1};
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t c = 0; c < 4; ++c) prod[i] += ht.get(i, c) * r2[c];
  const auto permuted = q.apply(prod);
  require_eq(permuted == std::vector<std::int32_t>{2, -2, 2, 2, -2, 2, -2, -2},
             true, "Q*Htilde*r");

  const DistanceProfile profile = branch_distance_profile(
      BipolarVector({std::vector<std::int8_t>{-1, 1, -1, -1}}), 1, 2);
  require_eq(profile.metrics == std::vector<std::int32_t>{1, 3, 1, 1, 3, 1, 3, 3},
             true, "profile distances");
}

// ---- criterion 3: enumeration vs signed Hadamard structure --------------

void criterion_enumeration_structure(std::ostream&) {
  for (int m = 1; m <= 8; ++m) {
    const CodewordEnumeration e = enumerate_codewords(reed_muller_generator(m));
    const SignedMatrix h = hadamard_matrix(m);
    const std::size_t half = std::size_t{1} << m;
    for (std::size_t i = 0; i < 2 * half; ++i) {
      const BipolarVector row = to_bipolar(e.words[i]);
      for (std::size_t c = 0; c < half; ++c) {
        const int expected = i < half ? h.get(i, c) : -h.get(i - half, c);
        if (row[c] != expected) throw Failure("RM enumeration != [H; -H]");
      }
    }
  }

  for (auto [k, delta] : std::vector<std::pair<int, int>>{
           {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}}) {
    const SignedMatrix ht = build_Htilde(k, delta);
    const CodewordEnumeration e =
        enumerate_codewords(partial_simplex_generator(k, delta));
    for (std::size_t r = 0; r < ht.rows(); ++r) {
      const BipolarVector row = to_bipolar(e.words[r]);
      for (std::size_t c = 0; c < ht.cols(); ++c)
        if (ht.get(r, c) != row[c]) throw Failure("Htilde != bipolar enumeration");
    }
  }

  // the two worked interleavings, verbatim
  const std::vector<std::vector<int>> hat1 = {
      {-1, -1, -1, -1}, {1, 1, 1, 1}, {-1, 1, -1, 1}, {1, -1, 1, -1},
      {-1, -1, 1, 1},   {1, 1, -1, -1}, {-1, 1, 1, -1}, {1, -1, -1, 1}};
  const SignedMatrix h1 = build_Hhat(3, 1, 1);
  for (std::size_t r = 0; r < 8; ++r)
    if (h1.row(r) != hat1[r]) throw Failure("first worked interleaving block");
  const std::vector<std::vector<int>> hat2 = {
      {-1, -1}, {-1, -1}, {1, 1}, {1, 1}, {-1, 1}, {-1, 1}, {1, -1}, {1, -1}};
  const SignedMatrix h2 = build_Hhat(3, 1, 2);
  for (std::size_t r = 0; r < 8; ++r)
    if (h2.row(r) != hat2[r]) throw Failure("second worked interleaving block");
}

// ---- criterion 4: fast transform oracle ---------------------------------

void criterion_fwht_oracle(std::ostream&) {
  std::mt19937_64 rng(0xACCE5501);
  for (int m = 1; m <= 10; ++m) {
    const std::size_t len = std::size_t{1} << m;
    const SignedMatrix h = hadamard_matrix(m);
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<std::int32_t> x(len);
      for (auto& v : x) v = static_cast<std::int32_t>(rng() % 201) - 100;
      const std::vector<std::int32_t> got = fwht(x);
      for (std::size_t i = 0; i < len; ++i) {
        std::int64_t expect = 0;
        for (std::size_t j = 0; j < len; ++j)
          expect += static_cast<std::int64_t>(h.get(i, j)) * x[j];
        if (got[i] != expect) throw Failure("fwht != dense transform");
      }
      const std::vector<std::int32_t> twice = fwht(got);
      for (std::size_t i = 0; i < len; ++i)
        if (twice[i] != x[i] * static_cast<std::int32_t>(len))
          throw Failure("fwht involution scaled by 2^m");
    }
  }
}

// ---- criterion 5: distance-profile oracle -------------------------------

void criterion_profile_oracle(std::ostream&) {
  std::mt19937_64 rng(0xACCE5502);
  for (auto [k, delta] : std::vector<std::pair<int, int>>{
           {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}}) {
    const BinaryMatrix stacked = partial_simplex_generator(k, delta).generator;
    const DistanceProfiler profiler(k, delta);
    for (int trial = 0; trial < 100; ++trial) {
      const BipolarVector r =
          testutil::random_bipolar_vector(rng, profiler.block_length());
      const DistanceProfile got = profiler.profile(r);
      const std::vector<int> expected = testutil::brute_force_profile(r, stacked);
      for (std::size_t i = 0; i < expected.size(); ++i)
        if (got.metrics[i] != expected[i])
          throw Failure("profile != brute-force distances");
    }
  }
}

// ---- criterion 6: column distances --------------------------------------

void criterion_column_distances(std::ostream&) {
  for (auto [k, delta] : std::vector<std::pair<int, int>>{
           {1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}, {1, 3}}) {
    const auto g = PolyGeneratorMatrix::partial_simplex(k, delta);
    for (int j = 0; j <= delta / k + 2; ++j) {
      const int brute = column_distance(g, j);
      const int formula = partial_simplex_column_distance(k, delta, j);
      if (brute != formula) {
        std::ostringstream msg;
        msg << "column distance mismatch at (k=" << k << ", delta=" << delta
            << ", j=" << j << "): brute " << brute << " vs formula " << formula;
        throw Failure(msg.str());
      }
    }
  }
  require_eq(free_distance_estimate(PolyGeneratorMatrix::partial_simplex(1, 2), 2),
             8, "free distance of the (4,1,2) code");
}

// ---- criterion 7: decoder equivalence ------------------------------------

void criterion_decoder_equivalence(std::ostream&) {
  std::mt19937_64 rng(0xACCE5503);
  for (auto [k, delta] : std::vector<std::pair<int, int>>{
           {1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}}) {
    const auto g = PolyGeneratorMatrix::partial_simplex(k, delta);
    for (int trial = 0; trial < 1000; ++trial) {
      const int L = 1 + static_cast<int>(rng() % 20);
      const PolyCodeword r = testutil::random_received(rng, L + g.mu(), g.n());
      const DecodeResult classic = viterbi_decode(r, g);
      const DecodeResult improved = improved_viterbi_decode(to_bipolar_blocks(r), g);
      if (classic.metric != improved.metric || classic.message != improved.message ||
          classic.codeword != improved.codeword)
        throw Failure("decoders disagree");
    }
  }
}

// ---- criterion 8: guaranteed correction ----------------------------------

void criterion_guaranteed_correction(std::ostream& log) {
  const auto g = PolyGeneratorMatrix::partial_simplex(1, 2);
  const MessageSequence msg = message_from_bits({1, 0, 1, 1});
  const PolyCodeword sent = encode(msg, g);
  const int bits = static_cast<int>(sent.blocks.size()) * g.n();
  REQUIRE_TRUE(bits == 24);

  long patterns = 0;
  const auto check = [&](std::initializer_list<std::size_t> flips) {
    const PolyCodeword r = inject_errors(sent, flips);
    ++patterns;
    if (viterbi_decode(r, g).message != msg)
      throw Failure("classic decoder failed inside the correction radius");
    if (improved_viterbi_decode(to_bipolar_blocks(r), g).message != msg)
      throw Failure("improved decoder failed inside the correction radius");
  };
  for (std::size_t a = 0; a < 24; ++a) {
    check({a});
    for (std::size_t b = a + 1; b < 24; ++b) {
      check({a, b});
      for (std::size_t c = b + 1; c < 24; ++c) check({a, b, c});
    }
  }
  require_eq(patterns, 2324L, "error pattern count");
  log << " (" << patterns << " patterns)";
}

// ---- criterion 9: complexity separation -----------------------------------

void criterion_complexity(std::ostream& log) {
  std::ostringstream csv;
  csv << "k,delta,n,classic_adds_per_step,improved_adds_per_step,ratio\n";
  for (int k = 1; k <= 2; ++k) {
    double prev_ratio = -1.0;
    for (int delta = 2; delta <= 8; ++delta) {
      const auto g = PolyGeneratorMatrix::partial_simplex(k, delta);
      const int L = 2 * g.mu() + 6;
      const BenchReport r = run_bench(k, delta, L, 2, 0.02, 0xACCE5504);
      REQUIRE_TRUE(r.metric_mismatches == 0);
      REQUIRE_TRUE(r.improved.steady_steps > 0);

      const double n = r.n;
      const double tuples = std::pow(2.0, delta + k);
      const double improved = r.improved.adds_per_step();
      const double classic = r.classic.adds_per_step();

      // improved per step <= 2 n log2 n + c1 * 2^(delta+k), c1 = 4
      if (improved > 2.0 * n * std::log2(n) + 4.0 * tuples)
        throw Failure("improved per-step additions exceed the fast bound");
      // classic per step is n-proportional work per branch tuple
      const double per_tuple = classic / tuples;
      if (per_tuple < n || per_tuple > n + 4)
        throw Failure("classic per-step additions do not scale as 2^(delta+k) * n");

      const double ratio = improved / classic;
      if (prev_ratio >= 0 && ratio >= prev_ratio)
        throw Failure("improved/classic ratio is not decreasing in delta");
      prev_ratio = ratio;
      csv << k << ',' << delta << ',' << r.n << ',' << classic << ','
          << improved << ',' << ratio << '\n';
    }
  }
  std::ofstream out("complexity_separation.csv");
  out << csv.str();
  log << " (table: complexity_separation.csv)";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"reference trellis decode (state metrics, codeword, message, ML metric)",
       1.0, criterion_trellis},
      {"fast-profile worked example (fwht, Q, Q*Htilde*r, distances)", 1.0,
       criterion_profile_example},
      {"bipolar enumeration matches [H;-H] and Htilde", 5.0,
       criterion_enumeration_structure},
      {"fwht equals the dense transform (1000 vectors per m <= 10)", 5.0,
       criterion_fwht_oracle},
      {"distance profile equals brute force (100 words per parameter set)",
       10.0, criterion_profile_oracle},
      {"column distances match the closed form", 30.0,
       criterion_column_distances},
      {"decoder equivalence (1000 seeded trials per parameter set)", 60.0,
       criterion_decoder_equivalence},
      {"all error patterns of weight <= 3 corrected", 10.0,
       criterion_guaranteed_correction},
      {"complexity separation (per-step bound, ratio monotone)", 300.0,
       criterion_complexity},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream note;
    std::string error;
    try {
      criteria[i].run(note);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (error.empty() && seconds > criteria[i].budget_seconds)
      error = "exceeded time budget";
    const bool ok = error.empty();
    failures += ok ? 0 : 1;
    std::cout << "[" << (i + 1) << "/" << criteria.size() << "] "
              << (ok ? "PASS" : "FAIL") << " " << criteria[i].name << note.str();
    std::cout << " [" << seconds << " s";
    if (!ok) std::cout << "; " << error;
    std::cout << "]\n";
  }
  std::cout << "acceptance: " << (criteria.size() - failures) << "/"
            << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
