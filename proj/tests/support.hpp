#pragma once

// Shared helpers for the test suite: deterministic random programs, random
// operand words, and a driver that runs a word operation through the
// register machine.

#include <cstdint>
#include <random>
#include <vector>

#include "pga/instruction.hpp"
#include "pga/machine.hpp"
#include "pga/word_ops.hpp"

namespace pga::test {

inline constexpr std::uint32_t small_input_count = 8;
inline constexpr std::uint32_t small_output_count = 8;
inline constexpr std::uint32_t small_aux_count = 16;

// Random instruction over a small register window, biased toward basic
// instructions so programs actually touch state.
inline instruction random_instruction(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind_dist(0, 9);
  std::uniform_int_distribution<std::uint32_t> jump_dist(0, 12);
  const int kind = kind_dist(rng);
  if (kind == 0) return instruction::fwd_jump(jump_dist(rng));
  if (kind == 1) return instruction::halt();
  std::uniform_int_distribution<int> reg_dist(0, 2);
  basic_instruction b;
  switch (reg_dist(rng)) {
    case 0:
      b = get_of(in_reg(std::uniform_int_distribution<std::uint32_t>(1, small_input_count)(rng)));
      break;
    case 1:
      b = set_of(out_reg(std::uniform_int_distribution<std::uint32_t>(1, small_output_count)(rng)),
                 rng() & 1);
      break;
    default: {
      const auto reg = aux_reg(std::uniform_int_distribution<std::uint32_t>(1, small_aux_count)(rng));
      b = rng() & 1 ? get_of(reg) : set_of(reg, rng() & 1);
      break;
    }
  }
  switch (kind % 3) {
    case 0: return instruction::test_pos(b);
    case 1: return instruction::test_neg(b);
    default: return instruction::plain(b);
  }
}

inline instruction_sequence random_sequence(std::mt19937& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  instruction_sequence seq(len_dist(rng));
  for (auto& ins : seq) ins = random_instruction(rng);
  return seq;
}

inline std::vector<std::uint8_t> random_bits(std::mt19937& rng, std::size_t count) {
  std::vector<std::uint8_t> bits(count);
  for (auto& b : bits) b = rng() & 1;
  return bits;
}

// Mix of uniform random words and boundary words.
inline std::uint32_t random_word(std::mt19937& rng) {
  static constexpr std::uint32_t edges[] = {0x00000000, 0xffffffff, 0x00000001, 0x80000000,
                                            0x7fffffff, 0xaaaaaaaa, 0x55555555, 0xfffffffe};
  if (std::uniform_int_distribution<int>(0, 9)(rng) == 0)
    return edges[std::uniform_int_distribution<std::size_t>(0, std::size(edges) - 1)(rng)];
  return static_cast<std::uint32_t>(rng());
}

// Runs `op` on operand words preloaded into auxiliary source words and
// returns the destination word; asserts nothing itself.
struct op_run {
  std::uint32_t result;
  run_metrics metrics;
  run_status status;
  std::uint64_t program_length;
};

inline op_run run_op(word_op op, const std::vector<std::uint32_t>& operands) {
  static const word_ref sources[] = {word_ref::aux(1), word_ref::aux(33), word_ref::aux(65)};
  const word_ref dst = word_ref::aux(97);
  std::vector<word_ref> srcs(operands.size());
  for (std::size_t i = 0; i < operands.size(); ++i) srcs[i] = sources[i];

  instruction_sequence program = is_basic_op(op.kind)
                                     ? gen_basic(op, srcs, dst)
                                     : gen_derived(op, srcs, dst);
  program.push_back(instruction::halt());

  machine m({}, 0, 2945, program.size());
  for (std::size_t i = 0; i < operands.size(); ++i) store_aux_word(m, srcs[i], operands[i]);
  m.feed(program);
  m.finish();
  return {load_word(m, dst), m.metrics(), m.status(), program.size()};
}

}  // namespace pga::test
