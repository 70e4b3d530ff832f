#pragma once

#include <iosfwd>
#include <string>

#include "pscc/convolutional.hpp"

namespace pscc {

enum class BlockKind { message, codeword };

// Text block format: header line "k n delta mu L", then one '0'/'1' line per
// time step. Message files hold L lines of width k; codeword-shaped files
// hold L + mu lines of width n. The header must describe a k-partial simplex
// code; the line width decides the kind.
struct BlockFile {
  int k = 0, n = 0, delta = 0, mu = 0, L = 0;
  BlockKind kind = BlockKind::message;
  std::vector<BinaryVector> blocks;
};

BlockFile read_block_file(std::istream& in);
void write_block_file(std::ostream& out, const BlockFile& file);

BlockFile make_message_file(const PolyGeneratorMatrix& g, const MessageSequence& u);
BlockFile make_codeword_file(const PolyGeneratorMatrix& g, const PolyCodeword& c,
                             int message_blocks);

MessageSequence to_message(const BlockFile& file);
PolyCodeword to_codeword(const BlockFile& file);

}  // namespace pscc
