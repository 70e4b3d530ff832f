// Command-line frontend: construct generators, encode, run the channel,
// decode with either algorithm, verify column distances, and benchmark.
//
// Exit codes: 0 success, 2 usage, 3 parse, 4 verification mismatch,
// 5 resource.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pscc/bench.hpp"
#include "pscc/channel.hpp"
#include "pscc/io.hpp"
#include "pscc/trellis.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitMismatch = 4;
constexpr int kExitResource = 5;

pscc::BlockFile read_block_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pscc::ParseError("cannot open input file: " + path);
  return pscc::read_block_file(in);
}

void write_block_path(const std::string& path, const pscc::BlockFile& file) {
  std::ofstream out(path);
  if (!out) throw pscc::ParseError("cannot open output file: " + path);
  pscc::write_block_file(out, file);
}

std::string join_blocks(const std::vector<pscc::BinaryVector>& blocks) {
  std::string s;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += ' ';
    s += blocks[i].to_string();
  }
  return s;
}

std::string generator_summary(const pscc::PolyGeneratorMatrix& g, int jmax) {
  std::ostringstream out;
  out << "k " << g.k() << "\n"
      << "delta " << g.delta() << "\n"
      << "n " << g.n() << "\n"
      << "mu " << g.mu() << "\n";
  for (int i = 0; i <= g.mu(); ++i) {
    out << "G[" << i << "]\n" << g.coeff(i).to_text();
  }
  out << "column_distances\n";
  for (int j = 0; j <= jmax; ++j)
    out << "j " << j << " d "
        << pscc::partial_simplex_column_distance(g.k(), g.delta(), j) << "\n";
  out << "d_free " << pscc::partial_simplex_column_distance(g.k(), g.delta(), jmax)
      << "\n";
  return out.str();
}

int cmd_construct(int k, int delta, const std::string& out_path) {
  const auto g = pscc::PolyGeneratorMatrix::partial_simplex(k, delta);
  const int plateau = delta / k;
  const std::string text = generator_summary(g, plateau + 2);
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw pscc::ParseError("cannot open output file: " + out_path);
    out << text;
  }
  return 0;
}

int cmd_encode(const std::string& in_path, const std::string& out_path) {
  const pscc::BlockFile in = read_block_path(in_path);
  const auto g = pscc::PolyGeneratorMatrix::partial_simplex(in.k, in.delta);
  const pscc::MessageSequence msg = pscc::to_message(in);
  const pscc::PolyCodeword c = pscc::encode(msg, g);
  write_block_path(out_path, pscc::make_codeword_file(g, c, in.L));
  std::cout << "encoded " << in.L << " blocks -> " << c.blocks.size()
            << " blocks of length " << g.n() << "\n";
  return 0;
}

int cmd_transmit(const std::string& in_path, const std::string& out_path, double p,
                 std::uint64_t seed) {
  const pscc::BlockFile in = read_block_path(in_path);
  const auto g = pscc::PolyGeneratorMatrix::partial_simplex(in.k, in.delta);
  const pscc::PolyCodeword sent = pscc::to_codeword(in);
  const pscc::PolyCodeword received = pscc::bsc_transmit(sent, {p, seed});
  write_block_path(out_path, pscc::make_codeword_file(g, received, in.L));
  int flipped = 0;
  for (std::size_t t = 0; t < sent.blocks.size(); ++t)
    flipped += pscc::hamming_distance(sent.blocks[t], received.blocks[t]);
  std::cout << "flipped " << flipped << " bits\n";
  return 0;
}

void print_decode(const std::string& name, const pscc::DecodeResult& r) {
  std::cout << "decoder " << name << "\n"
            << "metric " << r.metric << "\n"
            << "additions " << r.ops.additions << "\n"
            << "comparisons " << r.ops.comparisons << "\n";
}

int cmd_decode(const std::string& in_path, const std::string& decoder,
               const std::string& out_path) {
  const pscc::BlockFile in = read_block_path(in_path);
  const auto g = pscc::PolyGeneratorMatrix::partial_simplex(in.k, in.delta);
  const pscc::PolyCodeword received = pscc::to_codeword(in);

  std::optional<pscc::DecodeResult> result;
  if (decoder == "classic") {
    result = pscc::viterbi_decode(received, g);
    print_decode("classic", *result);
  } else if (decoder == "improved") {
    result = pscc::improved_viterbi_decode(pscc::to_bipolar_blocks(received), g);
    print_decode("improved", *result);
  } else {  // both
    const pscc::DecodeResult classic = pscc::viterbi_decode(received, g);
    const pscc::DecodeResult improved =
        pscc::improved_viterbi_decode(pscc::to_bipolar_blocks(received), g);
    print_decode("classic", classic);
    print_decode("improved", improved);
    if (classic.metric != improved.metric ||
        classic.message != improved.message ||
        classic.codeword != improved.codeword) {
      std::cerr << "error: decoders disagree\n";
      return kExitMismatch;
    }
    result = improved;
  }

  std::cout << "message " << join_blocks(result->message.blocks) << "\n";
  if (!out_path.empty())
    write_block_path(out_path, pscc::make_message_file(g, result->message));
  return 0;
}

int cmd_verify_distances(int k, int delta, int jmax) {
  const auto g = pscc::PolyGeneratorMatrix::partial_simplex(k, delta);
  bool ok = true;
  std::cout << "j brute formula status\n";
  for (int j = 0; j <= jmax; ++j) {
    const int brute = pscc::column_distance(g, j);
    const int formula = pscc::partial_simplex_column_distance(k, delta, j);
    const bool match = brute == formula;
    ok = ok && match;
    std::cout << j << ' ' << brute << ' ' << formula << ' '
              << (match ? "PASS" : "FAIL") << "\n";
  }
  std::cout << "verify-distances " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : kExitMismatch;
}

int cmd_bench(int k, int delta, int L, std::uint64_t trials, double p,
              std::uint64_t seed, const std::string& format,
              const std::string& out_path) {
  const pscc::BenchReport report = pscc::run_bench(k, delta, L, trials, p, seed);
  const std::string text = format == "csv" ? pscc::bench_report_csv(report)
                                           : pscc::bench_report_json(report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw pscc::ParseError("cannot open output file: " + out_path);
    out << text;
    std::cout << "wrote " << out_path << "\n";
  }
  if (report.metric_mismatches) {
    std::cerr << "error: decoders disagreed on " << report.metric_mismatches
              << " trials\n";
    return kExitMismatch;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binary k-partial simplex convolutional codes: construction, "
               "encoding, channel simulation, decoding, benchmarks"};
  app.require_subcommand(1);

  int k = 1, delta = 1, jmax = 4, length = 10;
  double p = 0.0;
  std::uint64_t seed = 0, trials = 100;
  std::string in_path, out_path, decoder = "improved", format = "json";

  auto* construct = app.add_subcommand("construct", "print G_0..G_mu and distances");
  construct->add_option("--k", k, "input block size")->required();
  construct->add_option("--delta", delta, "code degree")->required();
  construct->add_option("--out", out_path, "also write the summary to a file");

  auto* enc = app.add_subcommand("encode", "encode a message file");
  enc->add_option("--in", in_path, "message file")->required();
  enc->add_option("--out", out_path, "codeword file")->required();

  auto* tx = app.add_subcommand("transmit", "binary symmetric channel");
  tx->add_option("--in", in_path, "codeword file")->required();
  tx->add_option("--out", out_path, "received file")->required();
  tx->add_option("--p", p, "bit flip probability")->required();
  tx->add_option("--seed", seed, "channel seed");

  auto* dec = app.add_subcommand("decode", "maximum likelihood decoding");
  dec->add_option("--in", in_path, "received file")->required();
  dec->add_option("--decoder", decoder, "classic | improved | both")
      ->check(CLI::IsMember({"classic", "improved", "both"}));
  dec->add_option("--out", out_path, "decoded message file");

  auto* verify = app.add_subcommand("verify-distances",
                                    "brute-force column distances vs closed form");
  verify->add_option("--k", k, "input block size")->required();
  verify->add_option("--delta", delta, "code degree")->required();
  verify->add_option("--jmax", jmax, "largest column index");

  auto* bench = app.add_subcommand("bench", "operation-count comparison");
  bench->add_option("--k", k, "input block size")->required();
  bench->add_option("--delta", delta, "code degree")->required();
  bench->add_option("--length", length, "message blocks per trial");
  bench->add_option("--trials", trials, "number of trials");
  bench->add_option("--p", p, "bit flip probability");
  bench->add_option("--seed", seed, "base seed");
  bench->add_option("--format", format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  bench->add_option("--out", out_path, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (construct->parsed()) {
      if (k < 1 || delta < 1) throw pscc::ParameterError("k and delta must be >= 1");
      return cmd_construct(k, delta, out_path);
    }
    if (enc->parsed()) return cmd_encode(in_path, out_path);
    if (tx->parsed()) return cmd_transmit(in_path, out_path, p, seed);
    if (dec->parsed()) return cmd_decode(in_path, decoder, out_path);
    if (verify->parsed()) {
      if (k < 1 || delta < 1 || jmax < 0)
        throw pscc::ParameterError("bad parameters");
      return cmd_verify_distances(k, delta, jmax);
    }
    if (bench->parsed()) {
      if (k < 1 || delta < 1)
        throw pscc::ParameterError("k and delta must be >= 1");
      return cmd_bench(k, delta, length, trials, p, seed, format, out_path);
    }
  } catch (const pscc::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const pscc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const pscc::DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const pscc::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
