#pragma once

// Generators for instruction sequences computing the 32-bit word operations
// used by SHA-256, plus a direct arithmetic oracle for testing them.
//
// A word lives in 32 successive registers whose base number is 1 mod 32;
// the register at offset i holds the bit of significance 2^i.  Under that
// layout the adder ripples its carry from offset 0 upward and SHR/ROTR move
// offset i+n to offset i, which is a right shift/rotation.
//
// Each generator emits a fixed instruction-for-instruction shape, including
// the jump offsets; the closed-form lengths below are part of the contract.
// The destination word must differ from every source word (sources may
// repeat).  The adder uses the dedicated carry register aux:2945; the
// derived operations use the four scratch words based at aux:2817..2913,
// which therefore must not overlap their operands.

#include <bit>
#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "pga/instruction.hpp"
#include "pga/machine.hpp"

namespace pga {

template <typename S>
concept instruction_sink = std::invocable<S&, const instruction&>;

struct word_ref {
  reg_kind kind{reg_kind::aux};
  std::uint32_t base{1};  // 1 mod 32

  register_name bit(std::uint32_t offset) const { return {kind, base + offset}; }

  static word_ref input(std::uint32_t base) { return make(reg_kind::input, base); }
  static word_ref output(std::uint32_t base) { return make(reg_kind::output, base); }
  static word_ref aux(std::uint32_t base) { return make(reg_kind::aux, base); }

  friend bool operator==(const word_ref&, const word_ref&) = default;

 private:
  static word_ref make(reg_kind kind, std::uint32_t base) {
    if (base % 32 != 1)
      throw std::invalid_argument("word base " + std::to_string(base) + " is not 1 mod 32");
    return {kind, base};
  }
};

inline std::string to_string(const word_ref& w) {
  return detail::register_text(w.kind, w.base);
}

// Carry register of the adder and scratch words of the derived operations.
inline constexpr register_name carry_bit{reg_kind::aux, 2945};
inline word_ref derived_scratch(std::uint32_t k) {
  if (k < 1 || k > 4) throw std::out_of_range("derived scratch index must be 1..4");
  return word_ref::aux(2817 + 32 * (k - 1));
}

enum class op_kind : std::uint8_t {
  bit_not,
  bit_and,
  bit_xor,
  shr,
  rotr,
  add,
  ch,
  maj,
  big_sigma0,
  big_sigma1,
  small_sigma0,
  small_sigma1,
};

// An operation together with its shift/rotate amount where applicable.
struct word_op {
  op_kind kind{};
  std::uint32_t amount = 0;

  static word_op of(op_kind k) { return {k, 0}; }
  static word_op shr(std::uint32_t n) { return checked(op_kind::shr, n); }
  static word_op rotr(std::uint32_t n) { return checked(op_kind::rotr, n); }

  friend bool operator==(const word_op&, const word_op&) = default;

 private:
  static word_op checked(op_kind k, std::uint32_t n) {
    if (n < 1 || n > 31)
      throw std::invalid_argument("shift/rotate amount " + std::to_string(n) +
                                  " outside 1..31");
    return {k, n};
  }
};

inline bool is_basic_op(op_kind k) { return k <= op_kind::add; }

inline std::size_t arity(op_kind k) {
  switch (k) {
    case op_kind::bit_not:
    case op_kind::shr:
    case op_kind::rotr:
    case op_kind::big_sigma0:
    case op_kind::big_sigma1:
    case op_kind::small_sigma0:
    case op_kind::small_sigma1:
      return 1;
    case op_kind::bit_and:
    case op_kind::bit_xor:
    case op_kind::add:
      return 2;
    case op_kind::ch:
    case op_kind::maj:
      return 3;
  }
  return 0;
}

// Closed-form lengths of the generated sequences.
inline constexpr std::uint64_t len_not = 96;
inline constexpr std::uint64_t len_and = 192;
inline constexpr std::uint64_t len_xor = 288;
inline constexpr std::uint64_t len_rotr = 96;
inline constexpr std::uint64_t len_add = 705;
inline constexpr std::uint64_t len_set = 32;
inline constexpr std::uint64_t len_mov = 96;
constexpr std::uint64_t len_shr(std::uint32_t n) { return 96 - 2 * static_cast<std::uint64_t>(n); }
inline constexpr std::uint64_t len_ch = len_not + 2 * len_and + len_xor;                   // 768
inline constexpr std::uint64_t len_maj = 3 * len_and + 2 * len_xor;                        // 1152
inline constexpr std::uint64_t len_big_sigma = 3 * len_rotr + 2 * len_xor;                 // 864
inline constexpr std::uint64_t len_small_sigma0 = 2 * len_rotr + len_shr(3) + 2 * len_xor;  // 858
inline constexpr std::uint64_t len_small_sigma1 = 2 * len_rotr + len_shr(10) + 2 * len_xor; // 844

inline std::uint64_t op_length(word_op op) {
  switch (op.kind) {
    case op_kind::bit_not: return len_not;
    case op_kind::bit_and: return len_and;
    case op_kind::bit_xor: return len_xor;
    case op_kind::shr: return len_shr(op.amount);
    case op_kind::rotr: return len_rotr;
    case op_kind::add: return len_add;
    case op_kind::ch: return len_ch;
    case op_kind::maj: return len_maj;
    case op_kind::big_sigma0:
    case op_kind::big_sigma1: return len_big_sigma;
    case op_kind::small_sigma0: return len_small_sigma0;
    case op_kind::small_sigma1: return len_small_sigma1;
  }
  throw std::invalid_argument("unknown operation");
}

namespace detail {

inline void require_source(const word_ref& w) {
  if (w.kind == reg_kind::output)
    throw std::invalid_argument("source word " + to_string(w) + " must be input or auxiliary");
}

inline void require_destination(const word_ref& w) {
  if (w.kind == reg_kind::input)
    throw std::invalid_argument("destination word " + to_string(w) +
                                " must be auxiliary or output");
}

inline void require_distinct(const word_ref& dst, std::initializer_list<word_ref> srcs) {
  for (const auto& s : srcs)
    if (s == dst)
      throw std::invalid_argument("destination word " + to_string(dst) +
                                  " overlaps a source word");
}

inline void require_no_carry_overlap(std::initializer_list<word_ref> words) {
  for (const auto& w : words)
    if (w.kind == reg_kind::aux && w.base == carry_bit.number)
      throw std::invalid_argument("word " + to_string(w) +
                                  " overlaps the adder carry register");
}

inline void require_no_scratch_overlap(std::initializer_list<word_ref> words) {
  for (const auto& w : words)
    if (w.kind == reg_kind::aux && w.base >= 2817 && w.base <= 2913)
      throw std::invalid_argument("word " + to_string(w) +
                                  " overlaps the derived-operation scratch words");
}

inline instruction set_f(const word_ref& w, std::uint32_t i) {
  return instruction::plain(set_of(w.bit(i), false));
}
inline instruction set_t(const word_ref& w, std::uint32_t i) {
  return instruction::plain(set_of(w.bit(i), true));
}
inline instruction pos_get(const word_ref& w, std::uint32_t i) {
  return instruction::test_pos(get_of(w.bit(i)));
}
inline instruction neg_get(const word_ref& w, std::uint32_t i) {
  return instruction::test_neg(get_of(w.bit(i)));
}
inline instruction jump(std::uint32_t l) { return instruction::fwd_jump(l); }

}  // namespace detail

template <instruction_sink Sink>
void emit_not(word_ref src, word_ref dst, Sink&& sink) {
  using namespace detail;
  require_source(src);
  require_destination(dst);
  require_distinct(dst, {src});
  for (std::uint32_t i = 0; i < 32; ++i) {
    sink(set_f(dst, i));
    sink(neg_get(src, i));
    sink(set_t(dst, i));
  }
}

template <instruction_sink Sink>
void emit_and(word_ref src1, word_ref src2, word_ref dst, Sink&& sink) {
  using namespace detail;
  require_source(src1);
  require_source(src2);
  require_destination(dst);
  require_distinct(dst, {src1, src2});
  for (std::uint32_t i = 0; i < 32; ++i) {
    sink(set_f(dst, i));
    sink(neg_get(src1, i));
    sink(jump(4));
    sink(neg_get(src2, i));
    sink(jump(2));
    sink(set_t(dst, i));
  }
}

template <instruction_sink Sink>
void emit_xor(word_ref src1, word_ref src2, word_ref dst, Sink&& sink) {
  using namespace detail;
  require_source(src1);
  require_source(src2);
  require_destination(dst);
  require_distinct(dst, {src1, src2});
  for (std::uint32_t i = 0; i < 32; ++i) {
    sink(set_f(dst, i));
    sink(neg_get(src1, i));
    sink(jump(4));
    sink(pos_get(src2, i));
    sink(jump(5));
    sink(jump(3));
    sink(neg_get(src2, i));
    sink(jump(2));
    sink(set_t(dst, i));
  }
}

template <instruction_sink Sink>
void emit_shr(std::uint32_t n, word_ref src, word_ref dst, Sink&& sink) {
  using namespace detail;
  (void)word_op::shr(n);  // range check
  require_source(src);
  require_destination(dst);
  require_distinct(dst, {src});
  for (std::uint32_t i = 0; i + n < 32; ++i) {
    sink(set_f(dst, i));
    sink(pos_get(src, i + n));
    sink(set_t(dst, i));
  }
  for (std::uint32_t i = 0; i < n; ++i) sink(set_f(dst, i + 32 - n));
}

template <instruction_sink Sink>
void emit_rotr(std::uint32_t n, word_ref src, word_ref dst, Sink&& sink) {
  using namespace detail;
  (void)word_op::rotr(n);  // range check
  require_source(src);
  require_destination(dst);
  require_distinct(dst, {src});
  for (std::uint32_t i = 0; i + n < 32; ++i) {
    sink(set_f(dst, i));
    sink(pos_get(src, i + n));
    sink(set_t(dst, i));
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    sink(set_f(dst, i + 32 - n));
    sink(pos_get(src, i));
    sink(set_t(dst, i + 32 - n));
  }
}

// Ripple-carry addition mod 2^32.  Each 22-instruction bit group computes
// sum and carry-out of (src1[i], src2[i], carry) by case analysis; the
// carry-out of the last group is discarded.
template <instruction_sink Sink>
void emit_add(word_ref src1, word_ref src2, word_ref dst, Sink&& sink) {
  using namespace detail;
  require_source(src1);
  require_source(src2);
  require_destination(dst);
  require_distinct(dst, {src1, src2});
  require_no_carry_overlap({src1, src2, dst});
  const auto carry_get = instruction::test_neg(get_of(carry_bit));
  const auto carry_set_t = instruction::plain(set_of(carry_bit, true));
  const auto carry_set_f = instruction::plain(set_of(carry_bit, false));
  sink(carry_set_f);
  for (std::uint32_t i = 0; i < 32; ++i) {
    sink(set_f(dst, i));
    sink(neg_get(src1, i));
    sink(jump(7));
    sink(neg_get(src2, i));
    sink(jump(10));
    sink(carry_get);
    sink(jump(10));
    sink(set_t(dst, i));
    sink(jump(8));
    sink(neg_get(src2, i));
    sink(jump(8));
    sink(carry_get);
    sink(jump(8));
    sink(jump(3));
    sink(carry_get);
    sink(jump(5));
    sink(carry_set_t);
    sink(jump(5));
    sink(carry_get);
    sink(jump(2));
    sink(set_t(dst, i));
    sink(carry_set_f);
  }
}

// Writes a constant word; the instruction at offset i sets the bit of
// significance 2^i.
template <instruction_sink Sink>
void emit_set(std::uint32_t constant, word_ref dst, Sink&& sink) {
  using namespace detail;
  require_destination(dst);
  for (std::uint32_t i = 0; i < 32; ++i)
    sink((constant >> i) & 1 ? set_t(dst, i) : set_f(dst, i));
}

template <instruction_sink Sink>
void emit_mov(word_ref src, word_ref dst, Sink&& sink) {
  using namespace detail;
  require_source(src);
  require_destination(dst);
  require_distinct(dst, {src});
  for (std::uint32_t i = 0; i < 32; ++i) {
    sink(set_f(dst, i));
    sink(pos_get(src, i));
    sink(set_t(dst, i));
  }
}

namespace detail {

inline void require_derived_operands(std::initializer_list<word_ref> srcs, word_ref dst) {
  require_destination(dst);
  for (const auto& s : srcs) require_source(s);
  require_distinct(dst, srcs);
  require_no_scratch_overlap(srcs);
  require_no_scratch_overlap({dst});
}

}  // namespace detail

template <instruction_sink Sink>
void emit_ch(word_ref x, word_ref y, word_ref z, word_ref dst, Sink&& sink) {
  detail::require_derived_operands({x, y, z}, dst);
  const auto t1 = derived_scratch(1), t2 = derived_scratch(2), t3 = derived_scratch(3);
  emit_not(x, t1, sink);
  emit_and(x, y, t2, sink);
  emit_and(t1, z, t3, sink);
  emit_xor(t2, t3, dst, sink);
}

template <instruction_sink Sink>
void emit_maj(word_ref x, word_ref y, word_ref z, word_ref dst, Sink&& sink) {
  detail::require_derived_operands({x, y, z}, dst);
  const auto t1 = derived_scratch(1), t2 = derived_scratch(2), t3 = derived_scratch(3),
             t4 = derived_scratch(4);
  emit_and(x, y, t1, sink);
  emit_and(x, z, t2, sink);
  emit_and(y, z, t3, sink);
  emit_xor(t1, t2, t4, sink);
  emit_xor(t3, t4, dst, sink);
}

namespace detail {

// Common shape of the Sigma/sigma operations: three rotations/shifts of the
// source xor-ed together through the scratch words.
template <instruction_sink Sink>
void emit_triple_mix(word_ref src, word_ref dst, std::uint32_t r1, std::uint32_t r2,
                     std::uint32_t third_amount, bool third_is_shift, Sink&& sink) {
  require_derived_operands({src}, dst);
  const auto t1 = derived_scratch(1), t2 = derived_scratch(2), t3 = derived_scratch(3),
             t4 = derived_scratch(4);
  emit_rotr(r1, src, t1, sink);
  emit_rotr(r2, src, t2, sink);
  if (third_is_shift)
    emit_shr(third_amount, src, t3, sink);
  else
    emit_rotr(third_amount, src, t3, sink);
  emit_xor(t1, t2, t4, sink);
  emit_xor(t3, t4, dst, sink);
}

}  // namespace detail

template <instruction_sink Sink>
void emit_big_sigma0(word_ref src, word_ref dst, Sink&& sink) {
  detail::emit_triple_mix(src, dst, 2, 13, 22, false, sink);
}

template <instruction_sink Sink>
void emit_big_sigma1(word_ref src, word_ref dst, Sink&& sink) {
  detail::emit_triple_mix(src, dst, 6, 11, 25, false, sink);
}

template <instruction_sink Sink>
void emit_small_sigma0(word_ref src, word_ref dst, Sink&& sink) {
  detail::emit_triple_mix(src, dst, 7, 18, 3, true, sink);
}

template <instruction_sink Sink>
void emit_small_sigma1(word_ref src, word_ref dst, Sink&& sink) {
  detail::emit_triple_mix(src, dst, 17, 19, 10, true, sink);
}

namespace detail {

inline void require_arity(word_op op, std::size_t given) {
  if (arity(op.kind) != given)
    throw std::invalid_argument("operation expects " + std::to_string(arity(op.kind)) +
                                " source words, got " + std::to_string(given));
}

struct vector_sink {
  instruction_sequence* out;
  void operator()(const instruction& ins) { out->push_back(ins); }
};

}  // namespace detail

template <instruction_sink Sink>
void emit_op(word_op op, std::span<const word_ref> srcs, word_ref dst, Sink&& sink) {
  detail::require_arity(op, srcs.size());
  switch (op.kind) {
    case op_kind::bit_not: emit_not(srcs[0], dst, sink); return;
    case op_kind::bit_and: emit_and(srcs[0], srcs[1], dst, sink); return;
    case op_kind::bit_xor: emit_xor(srcs[0], srcs[1], dst, sink); return;
    case op_kind::shr: emit_shr(op.amount, srcs[0], dst, sink); return;
    case op_kind::rotr: emit_rotr(op.amount, srcs[0], dst, sink); return;
    case op_kind::add: emit_add(srcs[0], srcs[1], dst, sink); return;
    case op_kind::ch: emit_ch(srcs[0], srcs[1], srcs[2], dst, sink); return;
    case op_kind::maj: emit_maj(srcs[0], srcs[1], srcs[2], dst, sink); return;
    case op_kind::big_sigma0: emit_big_sigma0(srcs[0], dst, sink); return;
    case op_kind::big_sigma1: emit_big_sigma1(srcs[0], dst, sink); return;
    case op_kind::small_sigma0: emit_small_sigma0(srcs[0], dst, sink); return;
    case op_kind::small_sigma1: emit_small_sigma1(srcs[0], dst, sink); return;
  }
  throw std::invalid_argument("unknown operation");
}

inline instruction_sequence gen_basic(word_op op, std::span<const word_ref> srcs, word_ref dst) {
  if (!is_basic_op(op.kind))
    throw std::invalid_argument("gen_basic called with a derived operation");
  instruction_sequence seq;
  seq.reserve(op_length(op));
  emit_op(op, srcs, dst, detail::vector_sink{&seq});
  return seq;
}

inline instruction_sequence gen_derived(word_op op, std::span<const word_ref> srcs,
                                        word_ref dst) {
  if (is_basic_op(op.kind))
    throw std::invalid_argument("gen_derived called with a basic operation");
  instruction_sequence seq;
  seq.reserve(op_length(op));
  emit_op(op, srcs, dst, detail::vector_sink{&seq});
  return seq;
}

inline instruction_sequence gen_basic(word_op op, std::initializer_list<word_ref> srcs,
                                      word_ref dst) {
  return gen_basic(op, std::span<const word_ref>(srcs.begin(), srcs.size()), dst);
}

inline instruction_sequence gen_derived(word_op op, std::initializer_list<word_ref> srcs,
                                        word_ref dst) {
  return gen_derived(op, std::span<const word_ref>(srcs.begin(), srcs.size()), dst);
}

inline instruction_sequence gen_set(std::uint32_t constant, word_ref dst) {
  instruction_sequence seq;
  seq.reserve(len_set);
  emit_set(constant, dst, detail::vector_sink{&seq});
  return seq;
}

inline instruction_sequence gen_mov(word_ref src, word_ref dst) {
  instruction_sequence seq;
  seq.reserve(len_mov);
  emit_mov(src, dst, detail::vector_sink{&seq});
  return seq;
}

// Direct 32-bit arithmetic implementation of the same operations; the
// independent oracle the generated sequences are tested against.
inline std::uint32_t word_oracle(word_op op, std::span<const std::uint32_t> operands);

inline std::uint32_t word_oracle(word_op op, std::initializer_list<std::uint32_t> operands) {
  return word_oracle(op, std::span<const std::uint32_t>(operands.begin(), operands.size()));
}

inline std::uint32_t word_oracle(word_op op, std::span<const std::uint32_t> operands) {
  detail::require_arity(op, operands.size());
  std::uint32_t v[3] = {};
  for (std::size_t i = 0; i < operands.size() && i < 3; ++i) v[i] = operands[i];
  const auto [x, y, z] = v;
  switch (op.kind) {
    case op_kind::bit_not: return ~x;
    case op_kind::bit_and: return x & y;
    case op_kind::bit_xor: return x ^ y;
    case op_kind::shr: return x >> op.amount;
    case op_kind::rotr: return std::rotr(x, static_cast<int>(op.amount));
    case op_kind::add: return x + y;
    case op_kind::ch: return (x & y) ^ (~x & z);
    case op_kind::maj: return (x & y) ^ (x & z) ^ (y & z);
    case op_kind::big_sigma0: return std::rotr(x, 2) ^ std::rotr(x, 13) ^ std::rotr(x, 22);
    case op_kind::big_sigma1: return std::rotr(x, 6) ^ std::rotr(x, 11) ^ std::rotr(x, 25);
    case op_kind::small_sigma0: return std::rotr(x, 7) ^ std::rotr(x, 18) ^ (x >> 3);
    case op_kind::small_sigma1: return std::rotr(x, 17) ^ std::rotr(x, 19) ^ (x >> 10);
  }
  throw std::invalid_argument("unknown operation");
}

// Word-level access to a machine's register file, offset 0 = least
// significant bit.
inline void store_aux_word(machine& m, word_ref w, std::uint32_t value) {
  if (w.kind != reg_kind::aux)
    throw std::invalid_argument("store_aux_word requires an auxiliary word");
  for (std::uint32_t i = 0; i < 32; ++i) m.set_auxiliary(w.base + i, (value >> i) & 1);
}

inline std::uint32_t load_word(const machine& m, word_ref w) {
  std::uint32_t value = 0;
  for (std::uint32_t i = 0; i < 32; ++i) {
    const std::uint32_t number = w.base + i;
    const bool bit = w.kind == reg_kind::input    ? m.input(number)
                     : w.kind == reg_kind::output ? m.output(number)
                                                  : m.auxiliary(number);
    value |= static_cast<std::uint32_t>(bit) << i;
  }
  return value;
}

}  // namespace pga
