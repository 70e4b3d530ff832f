#include "pscc/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace pscc {

BlockFile read_block_file(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("block file: missing header");
  std::istringstream hs(header);
  BlockFile f;
  if (!(hs >> f.k >> f.n >> f.delta >> f.mu >> f.L))
    throw ParseError("block file: header must be \"k n delta mu L\"");
  std::string extra;
  if (hs >> extra) throw ParseError("block file: trailing header fields");
  if (f.k < 1 || f.delta < 1 || f.L < 1)
    throw ParseError("block file: parameters out of range");
  const int n = (1 << f.delta) * ((1 << f.k) - 1);
  const int mu = (f.delta + f.k - 1) / f.k;
  if (f.n != n || f.mu != mu)
    throw ParseError("block file: header inconsistent with k and delta");

  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    f.blocks.push_back(BinaryVector::from_string(line));
  }
  if (f.blocks.empty()) throw ParseError("block file: no blocks");
  const std::size_t width = f.blocks[0].size();
  for (const BinaryVector& b : f.blocks)
    if (b.size() != width) throw ParseError("block file: ragged block widths");

  if (width == static_cast<std::size_t>(f.k) &&
      f.blocks.size() == static_cast<std::size_t>(f.L)) {
    f.kind = BlockKind::message;
  } else if (width == static_cast<std::size_t>(f.n) &&
             f.blocks.size() == static_cast<std::size_t>(f.L + f.mu)) {
    f.kind = BlockKind::codeword;
  } else {
    throw ParseError("block file: block shape matches neither message nor codeword");
  }
  return f;
}

void write_block_file(std::ostream& out, const BlockFile& file) {
  out << file.k << ' ' << file.n << ' ' << file.delta << ' ' << file.mu << ' '
      << file.L << '\n';
  for (const BinaryVector& b : file.blocks) out << b.to_string() << '\n';
}

BlockFile make_message_file(const PolyGeneratorMatrix& g, const MessageSequence& u) {
  BlockFile f;
  f.k = g.k();
  f.n = g.n();
  f.delta = g.delta();
  f.mu = g.mu();
  f.L = static_cast<int>(u.blocks.size());
  f.kind = BlockKind::message;
  f.blocks = u.blocks;
  return f;
}

BlockFile make_codeword_file(const PolyGeneratorMatrix& g, const PolyCodeword& c,
                             int message_blocks) {
  BlockFile f;
  f.k = g.k();
  f.n = g.n();
  f.delta = g.delta();
  f.mu = g.mu();
  f.L = message_blocks;
  f.kind = BlockKind::codeword;
  f.blocks = c.blocks;
  return f;
}

MessageSequence to_message(const BlockFile& file) {
  if (file.kind != BlockKind::message)
    throw ParseError("block file: expected a message file");
  return {file.blocks};
}

PolyCodeword to_codeword(const BlockFile& file) {
  if (file.kind != BlockKind::codeword)
    throw ParseError("block file: expected a codeword-shaped file");
  return {file.blocks};
}

}  // namespace pscc
