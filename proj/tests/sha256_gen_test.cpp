#include "pga/sha256_gen.hpp"

#include <gtest/gtest.h>

#include "pga/machine.hpp"

namespace pga::sha256 {
namespace {

TEST(ExpectedLength, ClosedFormValues) {
  EXPECT_EQ(decimal(expected_length(1)), "781177");
  EXPECT_EQ(decimal(expected_length(2)), "1561329");
  EXPECT_EQ(decimal(expected_length(15625)), "12189876025");
}

TEST(ExpectedLength, MaximumBlockCountStaysExact) {
  // 780152 * 2^55 + 1025, evaluated with 128-bit integers
  EXPECT_EQ(decimal(expected_length(max_block_count)), "28107938051938777564161");
  EXPECT_THROW(expected_length(max_block_count + 1), std::out_of_range);
  EXPECT_THROW(expected_length(0), std::out_of_range);
}

TEST(ExpectedLength, StructuralSumEqualsClosedForm) {
  // the per-piece lengths recompose into the same coefficient
  EXPECT_EQ(preamble_length + block_length + postamble_length,
            static_cast<std::uint64_t>(expected_length(1)));
  const std::uint64_t round_body = len_big_sigma + len_ch + len_set + 4 * len_add +
                                   len_big_sigma + len_maj + len_add + 3 * len_mov + len_add +
                                   3 * len_mov + len_add;
  const std::uint64_t expansion = len_small_sigma1 + len_small_sigma0 + 3 * len_add;
  EXPECT_EQ(16 * len_mov + 48 * expansion + 8 * len_mov + 64 * round_body +
                8 * (len_mov + len_add),
            block_length);
}

TEST(Generate, LengthMatchesTheClosedForm) {
  for (const std::uint64_t blocks : {1ull, 2ull, 3ull, 5ull, 8ull}) {
    const auto program = generate_sha256(blocks);
    EXPECT_EQ(length(program), static_cast<std::uint64_t>(expected_length(blocks)))
        << "N=" << blocks;
  }
}

TEST(Generate, StartsWithTheEightStateLoads) {
  const auto program = generate_sha256(1);
  instruction_sequence expected;
  for (std::uint32_t j = 0; j < 8; ++j)
    emit_set(initial_hash_word(j), state_word(j), pga::detail::vector_sink{&expected});
  ASSERT_EQ(expected.size(), 256u);
  ASSERT_GE(program.size(), expected.size());
  EXPECT_TRUE(std::equal(expected.begin(), expected.end(), program.begin()));
}

TEST(Generate, EndsWithDigestMovesAndTermination) {
  const auto program = generate_sha256(1);
  instruction_sequence expected;
  emit_postamble(pga::detail::vector_sink{&expected});
  ASSERT_EQ(expected.size(), 769u);
  EXPECT_TRUE(std::equal(expected.rbegin(), expected.rend(), program.rbegin()));
  EXPECT_EQ(program.back(), instruction::halt());
}

TEST(Generate, PiecesConcatenateToTheWholeProgram) {
  const std::uint64_t blocks = 3;
  instruction_sequence pieced;
  pga::detail::vector_sink sink{&pieced};
  emit_preamble(sink);
  for (std::uint64_t i = 1; i <= blocks; ++i) emit_block(i, sink);
  emit_postamble(sink);
  EXPECT_EQ(pieced, generate_sha256(blocks));
}

TEST(Generate, MessageLoadRewriteReproducesLaterBlocks) {
  // rewriting the leading MOVs of block 1's body must yield block 2's body
  instruction_sequence body1, body2;
  emit_block(1, pga::detail::vector_sink{&body1});
  emit_block(2, pga::detail::vector_sink{&body2});
  ASSERT_EQ(body1.size(), block_length);
  ASSERT_EQ(body2.size(), block_length);
  EXPECT_NE(body1, body2);

  instruction* slot = body1.data();
  emit_message_load(2, [&slot](const instruction& ins) { *slot++ = ins; });
  EXPECT_EQ(static_cast<std::uint64_t>(slot - body1.data()), message_load_length);
  EXPECT_EQ(body1, body2);
}

TEST(Generate, RegisterFootprintIsIndependentOfBlockCount) {
  for (const std::uint64_t blocks : {1ull, 2ull, 3ull}) {
    const auto demand = required_registers(generate_sha256(blocks));
    EXPECT_EQ(demand.max_aux, max_aux_register) << "N=" << blocks;
    EXPECT_EQ(demand.max_output, output_register_count) << "N=" << blocks;
    EXPECT_EQ(demand.max_input, 512 * blocks) << "N=" << blocks;
  }
}

TEST(Generate, StreamingEmissionCountsWithoutMaterializing) {
  std::uint64_t count = 0;
  emit_program(100, [&count](const instruction&) { ++count; });
  EXPECT_EQ(count, static_cast<std::uint64_t>(expected_length(100)));
}

TEST(Generate, EnforcesBlockCountBounds) {
  EXPECT_THROW(generate_sha256(0), std::out_of_range);
  EXPECT_THROW(generate_sha256(default_block_cap + 1), std::out_of_range);
  EXPECT_THROW(generate_sha256(3, 2), std::out_of_range);
  EXPECT_NO_THROW(generate_sha256(3, 3));
  std::uint64_t count = 0;
  EXPECT_THROW(emit_program(0, [&count](const instruction&) { ++count; }), std::out_of_range);
  EXPECT_EQ(count, 0u);
}

}  // namespace
}  // namespace pga::sha256
