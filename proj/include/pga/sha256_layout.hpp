#pragma once

// Fixed register allocation for the SHA-256 programs, plus the numeric
// constants of the hash function.
//
// Message block words arrive in input registers (block i, word j at base
// 512*(i-1) + 32*j + 1), the digest words leave through output registers
// (word j at base 32*j + 1), and all intermediate words live in a fixed
// auxiliary-register map that is independent of the message length:
//
//   aux:1..2048     message schedule w0..w63
//   aux:2049..2304  hash state h0..h7
//   aux:2305..2560  working variables a..h
//   aux:2561..2624  round temporaries T1, T2
//   aux:2625..2816  scratch words t1..t6
//   aux:2817..2944  derived-operation scratch words
//   aux:2945        adder carry bit
//
// The highest auxiliary register used is therefore 2945.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "pga/word_ops.hpp"

namespace pga::sha256 {

inline constexpr std::uint32_t schedule_word_count = 64;
inline constexpr std::uint32_t state_word_count = 8;
inline constexpr std::uint32_t round_count = 64;
inline constexpr std::uint32_t words_per_block = 16;
inline constexpr std::uint32_t block_bits = 512;

inline constexpr std::uint32_t max_aux_register = 2945;
inline constexpr std::uint32_t output_register_count = 256;

namespace detail {
inline void require_index(std::uint32_t value, std::uint32_t limit, const char* what) {
  if (value >= limit)
    throw std::out_of_range(std::string(what) + " index " + std::to_string(value) +
                            " out of range (< " + std::to_string(limit) + ")");
}
}  // namespace detail

// Word j of message block i (blocks are numbered from 1).
inline word_ref message_word(std::uint64_t block, std::uint32_t j) {
  if (block < 1) throw std::out_of_range("block numbering starts at 1");
  detail::require_index(j, words_per_block, "message word");
  const std::uint64_t base = 512 * (block - 1) + 32 * j + 1;
  if (base > 0xFFFFFFFFull - 31)
    throw std::out_of_range("block " + std::to_string(block) +
                            " exceeds the register numbering range");
  return word_ref::input(static_cast<std::uint32_t>(base));
}

inline word_ref schedule_word(std::uint32_t j) {
  detail::require_index(j, schedule_word_count, "schedule word");
  return word_ref::aux(32 * j + 1);
}

inline word_ref state_word(std::uint32_t j) {
  detail::require_index(j, state_word_count, "state word");
  return word_ref::aux(32 * j + 2049);
}

// Working variables a..h as indices 0..7.
inline word_ref working_var(std::uint32_t j) {
  detail::require_index(j, 8, "working variable");
  return word_ref::aux(32 * j + 2305);
}

inline word_ref round_temp1() { return word_ref::aux(2561); }
inline word_ref round_temp2() { return word_ref::aux(2593); }

// Scratch words t1..t6.
inline word_ref scratch(std::uint32_t k) {
  if (k < 1 || k > 6) throw std::out_of_range("scratch index must be 1..6");
  return word_ref::aux(2625 + 32 * (k - 1));
}

inline word_ref digest_word(std::uint32_t j) {
  detail::require_index(j, state_word_count, "digest word");
  return word_ref::output(32 * j + 1);
}

inline std::uint32_t initial_hash_word(std::uint32_t j) {
  constexpr std::array<std::uint32_t, 8> h0 = {
      0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
      0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19,
  };
  detail::require_index(j, state_word_count, "initial hash word");
  return h0[j];
}

inline std::uint32_t round_constant(std::uint32_t j) {
  constexpr std::array<std::uint32_t, 64> k = {
      0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
      0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
      0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
      0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
      0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
      0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
      0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
      0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
      0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
      0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
      0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2,
  };
  detail::require_index(j, round_count, "round constant");
  return k[j];
}

}  // namespace pga::sha256
