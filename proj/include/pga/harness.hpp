#pragma once

// End-to-end pipeline: pad a message, map it into input registers, run the
// generated program on the register machine, and extract the digest.
//
// hash() feeds the machine the program as consecutive pieces - the preamble,
// one body per block, the postamble - reusing a single body buffer in which
// only the 16 message-load MOVs are rewritten per block (their input
// register bases are the only block-dependent part).  The pieces
// concatenate to exactly the N-block program, so nothing of the ~780k
// instructions per block is ever duplicated in memory.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "pga/machine.hpp"
#include "pga/sha256_gen.hpp"
#include "pga/sha256_layout.hpp"
#include "pga/sha256_reference.hpp"

namespace pga::harness {

// Thrown in verify mode when the register-machine digest disagrees with the
// reference implementation.
class verification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Standard SHA-256 padding: 0x80 marker, zero fill, 64-bit big-endian bit
// length, to a whole number of 512-bit blocks.
inline std::vector<std::uint8_t> pad_message(std::span<const std::uint8_t> message) {
  if (message.size() >= (1ull << 61)) throw std::length_error("message too long for SHA-256");
  const std::size_t padded_size = ((message.size() + 8) / 64 + 1) * 64;
  std::vector<std::uint8_t> padded(padded_size, 0);
  std::copy(message.begin(), message.end(), padded.begin());
  padded[message.size()] = 0x80;
  const std::uint64_t bit_len = std::uint64_t(message.size()) * 8;
  for (int i = 0; i < 8; ++i)
    padded[padded_size - 1 - i] = static_cast<std::uint8_t>(bit_len >> (8 * i));
  return padded;
}

// Maps a padded message onto input registers: each 32-bit word (big-endian
// within its four bytes, as the hash reads them) lands with its least
// significant bit at the word's lowest register.
inline std::vector<std::uint8_t> load_input_registers(std::span<const std::uint8_t> padded) {
  if (padded.size() % 64 != 0)
    throw std::invalid_argument("padded message must be a multiple of 512 bits");
  std::vector<std::uint8_t> bits(padded.size() * 8, 0);
  for (std::size_t w = 0; w < padded.size() / 4; ++w) {
    const std::uint32_t value = (std::uint32_t(padded[4 * w]) << 24) |
                                (std::uint32_t(padded[4 * w + 1]) << 16) |
                                (std::uint32_t(padded[4 * w + 2]) << 8) |
                                std::uint32_t(padded[4 * w + 3]);
    for (std::uint32_t i = 0; i < 32; ++i) bits[32 * w + i] = (value >> i) & 1;
  }
  return bits;
}

// Reads the digest from the 256 output registers; word j sits at registers
// 32j+1..32j+32 with offset 0 the least significant bit, and is rendered
// big-endian in the digest bytes.
inline digest extract_digest(const std::vector<std::uint8_t>& outputs) {
  if (outputs.size() != sha256::output_register_count)
    throw std::invalid_argument("expected 256 output registers, got " +
                                std::to_string(outputs.size()));
  digest d{};
  for (std::uint32_t j = 0; j < 8; ++j) {
    std::uint32_t value = 0;
    for (std::uint32_t i = 0; i < 32; ++i)
      value |= static_cast<std::uint32_t>(outputs[32 * j + i] & 1) << i;
    d[4 * j] = static_cast<std::uint8_t>(value >> 24);
    d[4 * j + 1] = static_cast<std::uint8_t>(value >> 16);
    d[4 * j + 2] = static_cast<std::uint8_t>(value >> 8);
    d[4 * j + 3] = static_cast<std::uint8_t>(value);
  }
  return d;
}

struct run_report {
  std::uint64_t blocks = 0;
  std::uint64_t program_length = 0;
  run_metrics metrics{};
};

struct hash_result {
  digest d{};
  run_report report{};
};

struct hash_options {
  bool verify = true;
  std::uint64_t block_cap = sha256::default_block_cap;
};

inline digest reference_sha256(std::span<const std::uint8_t> message) {
  return reference::sha256(message);
}

inline hash_result hash(std::span<const std::uint8_t> message, const hash_options& options = {}) {
  const auto padded = pad_message(message);
  const std::uint64_t blocks = padded.size() / 64;
  sha256::check_block_count(blocks, options.block_cap);
  const auto total_length = static_cast<std::uint64_t>(sha256::expected_length(blocks));

  machine m(load_input_registers(padded), sha256::output_register_count,
            sha256::max_aux_register, total_length);

  instruction_sequence piece;
  const auto refill = [&piece](auto&& emit) {
    piece.clear();
    emit(detail::vector_sink{&piece});
  };

  std::uint64_t fed = 0;
  const auto feed = [&] {
    m.feed(piece);
    fed += piece.size();
  };

  refill([](auto sink) { sha256::emit_preamble(sink); });
  feed();

  instruction_sequence body;
  body.reserve(sha256::block_length);
  for (std::uint64_t i = 1; i <= blocks; ++i) {
    if (i == 1) {
      sha256::emit_block(1, detail::vector_sink{&body});
    } else {
      // Only the leading message-load MOVs mention the block number;
      // rewrite them in place and keep the rest of the body.
      instruction* slot = body.data();
      sha256::emit_message_load(i, [&slot](const instruction& ins) { *slot++ = ins; });
    }
    m.feed(body);
    fed += body.size();
  }

  refill([](auto sink) { sha256::emit_postamble(sink); });
  feed();
  m.finish();

  if (fed != total_length)
    throw std::logic_error("program length bookkeeping mismatch");
  if (m.status() != run_status::terminated)
    throw std::logic_error(std::string("SHA-256 program did not terminate: ") +
                           to_cstring(m.status()));

  hash_result result;
  result.d = extract_digest(m.outputs());
  result.report = {blocks, total_length, m.metrics()};

  if (options.verify) {
    const auto expected = reference_sha256(message);
    if (result.d != expected)
      throw verification_error("digest mismatch: register machine computed " +
                               to_hex(result.d) + " but the reference implementation gives " +
                               to_hex(expected));
  }
  return result;
}

}  // namespace pga::harness
