#pragma once

// Generation of the SHA-256 instruction sequence for an N-block padded
// message.  The program is a flat concatenation
//
//   preamble:   8 x SET   load the initial hash state
//   N x block:  16 x MOV  load the block into the schedule
//               48 x (sigma1, sigma0, 3 x ADD)   schedule expansion
//               8 x MOV   load the working variables
//               64 x round (Sigma1, CH, SET K, 4 x ADD,
//                           Sigma0, MAJ, ADD, 3 x MOV, ADD, 3 x MOV, ADD)
//               8 x (MOV, ADD)   fold into the hash state
//   postamble:  8 x MOV, !       write the digest and terminate
//
// which makes the total length 780152*N + 1025.  Emission is streaming:
// any instruction sink can consume the program piecewise, so large N never
// requires the whole sequence in memory.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "pga/instruction.hpp"
#include "pga/sha256_layout.hpp"
#include "pga/word_ops.hpp"

namespace pga::sha256 {

// Block counts above this are representable but refuse to generate unless
// the caller raises the cap; 512*N input registers must be materialized to
// run the result.
inline constexpr std::uint64_t default_block_cap = 1ull << 16;

// Bound on N from the 64-bit maximum message bit length.
inline constexpr std::uint64_t max_block_count = 1ull << 55;

inline constexpr std::uint64_t preamble_length = 8 * len_set;  // 256
inline constexpr std::uint64_t message_load_length = 16 * len_mov;  // 1536
inline constexpr std::uint64_t block_length =
    message_load_length +
    48 * (len_small_sigma1 + len_small_sigma0 + 3 * len_add) +
    8 * len_mov +
    64 * (len_big_sigma + len_ch + len_set + 4 * len_add +
          len_big_sigma + len_maj + len_add +
          3 * len_mov + len_add + 3 * len_mov + len_add) +
    8 * (len_mov + len_add);  // 780152
inline constexpr std::uint64_t postamble_length = 8 * len_mov + 1;  // 769

static_assert(preamble_length == 256);
static_assert(block_length == 780152);
static_assert(postamble_length == 769);

using wide_uint = unsigned __int128;

inline std::string decimal(wide_uint value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out += static_cast<char>('0' + static_cast<unsigned>(value % 10));
    value /= 10;
  }
  return {out.rbegin(), out.rend()};
}

// Program length for N blocks, from the closed form 780152*N + 1025; also
// recomputed from the per-generator lengths following the program structure
// as a consistency check.
inline wide_uint expected_length(std::uint64_t blocks) {
  if (blocks < 1 || blocks > max_block_count)
    throw std::out_of_range("block count must be in 1.." + decimal(max_block_count));
  const wide_uint closed = wide_uint(780152) * blocks + 1025;
  const wide_uint structural =
      preamble_length + wide_uint(block_length) * blocks + postamble_length;
  if (closed != structural)
    throw std::logic_error("length bookkeeping mismatch: closed form " + decimal(closed) +
                           " vs structural sum " + decimal(structural));
  return closed;
}

template <instruction_sink Sink>
void emit_preamble(Sink&& sink) {
  for (std::uint32_t j = 0; j < 8; ++j)
    emit_set(initial_hash_word(j), state_word(j), sink);
}

// The 16 MOVs loading message block `block` into schedule words w0..w15;
// the only part of a block's code that depends on the block number.
template <instruction_sink Sink>
void emit_message_load(std::uint64_t block, Sink&& sink) {
  for (std::uint32_t j = 0; j < words_per_block; ++j)
    emit_mov(message_word(block, j), schedule_word(j), sink);
}

template <instruction_sink Sink>
void emit_block(std::uint64_t block, Sink&& sink) {
  emit_message_load(block, sink);

  // w[j] = sigma1(w[j-2]) + w[j-7] + sigma0(w[j-15]) + w[j-16]
  for (std::uint32_t j = 16; j < schedule_word_count; ++j) {
    emit_small_sigma1(schedule_word(j - 2), scratch(1), sink);
    emit_small_sigma0(schedule_word(j - 15), scratch(2), sink);
    emit_add(scratch(1), schedule_word(j - 7), scratch(3), sink);
    emit_add(scratch(2), schedule_word(j - 16), scratch(4), sink);
    emit_add(scratch(3), scratch(4), schedule_word(j), sink);
  }

  for (std::uint32_t j = 0; j < 8; ++j) emit_mov(state_word(j), working_var(j), sink);

  const auto a = working_var(0), b = working_var(1), c = working_var(2), d = working_var(3),
             e = working_var(4), f = working_var(5), g = working_var(6), h = working_var(7);
  for (std::uint32_t j = 0; j < round_count; ++j) {
    // T1 = h + Sigma1(e) + ch(e,f,g) + K[j] + w[j], assembled pairwise.
    emit_big_sigma1(e, scratch(1), sink);
    emit_ch(e, f, g, scratch(2), sink);
    emit_set(round_constant(j), scratch(3), sink);
    emit_add(scratch(1), h, scratch(4), sink);
    emit_add(scratch(2), scratch(3), scratch(5), sink);
    emit_add(scratch(5), schedule_word(j), scratch(6), sink);
    emit_add(scratch(4), scratch(6), round_temp1(), sink);
    // T2 = Sigma0(a) + maj(a,b,c)
    emit_big_sigma0(a, scratch(1), sink);
    emit_maj(a, b, c, scratch(2), sink);
    emit_add(scratch(1), scratch(2), round_temp2(), sink);
    // rotate the working variables
    emit_mov(g, h, sink);
    emit_mov(f, g, sink);
    emit_mov(e, f, sink);
    emit_add(d, round_temp1(), e, sink);
    emit_mov(c, d, sink);
    emit_mov(b, c, sink);
    emit_mov(a, b, sink);
    emit_add(round_temp1(), round_temp2(), a, sink);
  }

  // h[j] += working variable j, copying h[j] aside first since the adder
  // destination must differ from its sources.
  for (std::uint32_t j = 0; j < 8; ++j) {
    emit_mov(state_word(j), scratch(1), sink);
    emit_add(working_var(j), scratch(1), state_word(j), sink);
  }
}

template <instruction_sink Sink>
void emit_postamble(Sink&& sink) {
  for (std::uint32_t j = 0; j < 8; ++j) emit_mov(state_word(j), digest_word(j), sink);
  sink(instruction::halt());
}

inline void check_block_count(std::uint64_t blocks, std::uint64_t block_cap) {
  if (blocks < 1 || blocks > max_block_count)
    throw std::out_of_range("block count must be in 1.." + decimal(max_block_count));
  if (blocks > block_cap)
    throw std::out_of_range("block count " + std::to_string(blocks) + " exceeds the cap of " +
                            std::to_string(block_cap));
}

template <instruction_sink Sink>
void emit_program(std::uint64_t blocks, Sink&& sink,
                  std::uint64_t block_cap = default_block_cap) {
  check_block_count(blocks, block_cap);
  emit_preamble(sink);
  for (std::uint64_t i = 1; i <= blocks; ++i) emit_block(i, sink);
  emit_postamble(sink);
}

inline instruction_sequence generate_sha256(std::uint64_t blocks,
                                            std::uint64_t block_cap = default_block_cap) {
  check_block_count(blocks, block_cap);
  instruction_sequence seq;
  seq.reserve(static_cast<std::size_t>(expected_length(blocks)));
  emit_program(blocks, pga::detail::vector_sink{&seq}, block_cap);
  return seq;
}

}  // namespace pga::sha256
