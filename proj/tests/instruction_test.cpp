#include "pga/instruction.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace pga {
namespace {

TEST(Instruction, FactoriesEnforceRegisterDiscipline) {
  EXPECT_NO_THROW(instruction::plain(get_of(in_reg(1))));
  EXPECT_NO_THROW(instruction::plain(set_of(out_reg(1), true)));
  EXPECT_NO_THROW(instruction::plain(get_of(aux_reg(3))));
  EXPECT_NO_THROW(instruction::plain(set_of(aux_reg(3), false)));

  EXPECT_THROW(instruction::plain(set_of(in_reg(1), true)), std::invalid_argument);
  EXPECT_THROW(instruction::test_pos(get_of(out_reg(1))), std::invalid_argument);
  EXPECT_THROW(instruction::test_neg({{reg_kind::aux, 0}, reg_command::get}),
               std::invalid_argument);
}

TEST(Instruction, BasicAccessorRoundTrips) {
  const auto b = set_of(aux_reg(17), true);
  EXPECT_EQ(instruction::test_neg(b).basic(), b);
  EXPECT_TRUE(instruction::test_neg(b).is_basic());
  EXPECT_FALSE(instruction::fwd_jump(3).is_basic());
  EXPECT_FALSE(instruction::halt().is_basic());
}

TEST(Concat, EmptyListGivesEmptySequence) {
  EXPECT_EQ(length(concat({})), 0u);
}

TEST(Concat, FlattensInOrder) {
  const instruction_sequence a = {instruction::halt()};
  const instruction_sequence b = {instruction::fwd_jump(2)};
  const auto joined = concat({a, b});
  ASSERT_EQ(length(joined), 2u);
  EXPECT_EQ(joined[0], instruction::halt());
  EXPECT_EQ(joined[1], instruction::fwd_jump(2));
}

TEST(Concat, AssociativeWithEmptyIdentity) {
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    const auto x = test::random_sequence(rng, 12);
    const auto y = test::random_sequence(rng, 12);
    const auto z = test::random_sequence(rng, 12);
    EXPECT_EQ(concat({concat({x, y}), z}), concat({x, concat({y, z})}));
    EXPECT_EQ(concat({x, {}}), x);
    EXPECT_EQ(concat({{}, x}), x);
  }
}

TEST(Concat, LengthIsSumOfParts) {
  std::mt19937 rng(8);
  for (int round = 0; round < 100; ++round) {
    std::vector<instruction_sequence> parts(std::uniform_int_distribution<std::size_t>(0, 5)(rng));
    std::uint64_t total = 0;
    for (auto& p : parts) {
      p = test::random_sequence(rng, 20);
      total += length(p);
    }
    EXPECT_EQ(length(concat(parts)), total);
  }
}

TEST(Length, EmptySequenceIsZero) {
  EXPECT_EQ(length(instruction_sequence{}), 0u);
}

}  // namespace
}  // namespace pga
