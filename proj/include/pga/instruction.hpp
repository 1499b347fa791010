#pragma once

// Single-pass instruction sequences over Boolean-register basic instructions.
//
// A sequence is built from five primitive instruction kinds: a plain basic
// instruction, a positive test, a negative test, a forward jump, and a
// termination instruction.  Basic instructions name one Boolean register
// (input, output, or auxiliary; 1-based numbering) and either read it (get)
// or overwrite it with a constant (set:t / set:f).  Input registers are
// get-only, output registers are set-only, auxiliary registers allow both.
//
// All types here are plain values; sequences are safe to share read-only
// between threads.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pga {

enum class reg_kind : std::uint8_t { input, output, aux };

enum class reg_command : std::uint8_t { get, set_false, set_true };

inline const char* to_cstring(reg_kind k) {
  switch (k) {
    case reg_kind::input: return "in";
    case reg_kind::output: return "out";
    case reg_kind::aux: return "aux";
  }
  return "?";
}

struct register_name {
  reg_kind kind{reg_kind::aux};
  std::uint32_t number{1};  // 1-based

  friend bool operator==(const register_name&, const register_name&) = default;
};

inline register_name in_reg(std::uint32_t n) { return {reg_kind::input, n}; }
inline register_name out_reg(std::uint32_t n) { return {reg_kind::output, n}; }
inline register_name aux_reg(std::uint32_t n) { return {reg_kind::aux, n}; }

// A register/command pair.  Valid combinations: in.get, out.set:b, aux.get,
// aux.set:b.
struct basic_instruction {
  register_name reg{};
  reg_command cmd{reg_command::get};

  friend bool operator==(const basic_instruction&, const basic_instruction&) = default;
};

inline bool is_valid(const basic_instruction& b) {
  if (b.reg.number < 1) return false;
  switch (b.reg.kind) {
    case reg_kind::input: return b.cmd == reg_command::get;
    case reg_kind::output: return b.cmd != reg_command::get;
    case reg_kind::aux: return true;
  }
  return false;
}

inline basic_instruction get_of(register_name r) { return {r, reg_command::get}; }
inline basic_instruction set_of(register_name r, bool value) {
  return {r, value ? reg_command::set_true : reg_command::set_false};
}

enum class instr_kind : std::uint8_t { plain, test_pos, test_neg, fwd_jump, halt };

namespace detail {
inline std::string register_text(reg_kind kind, std::uint32_t number) {
  std::string s = to_cstring(kind);
  s += ':';
  s += std::to_string(number);
  return s;
}
}  // namespace detail

// One primitive instruction.  `arg` holds the register number for the three
// basic kinds and the jump distance for fwd_jump (distance 0 is a valid
// instruction; it yields inaction when executed).
struct instruction {
  instr_kind kind{instr_kind::halt};
  reg_kind reg{reg_kind::input};
  reg_command cmd{reg_command::get};
  std::uint32_t arg{0};

  static instruction plain(basic_instruction b) { return make(instr_kind::plain, b); }
  static instruction test_pos(basic_instruction b) { return make(instr_kind::test_pos, b); }
  static instruction test_neg(basic_instruction b) { return make(instr_kind::test_neg, b); }
  static instruction fwd_jump(std::uint32_t distance) {
    instruction i;
    i.kind = instr_kind::fwd_jump;
    i.arg = distance;
    return i;
  }
  static instruction halt() { return instruction{}; }

  bool is_basic() const { return kind <= instr_kind::test_neg; }

  basic_instruction basic() const { return {{reg, arg}, cmd}; }

  friend bool operator==(const instruction&, const instruction&) = default;

 private:
  static instruction make(instr_kind k, basic_instruction b) {
    if (!is_valid(b))
      throw std::invalid_argument("invalid basic instruction: " +
                                  detail::register_text(b.reg.kind, b.reg.number) +
                                  (b.cmd == reg_command::get ? ".get" : ".set"));
    instruction i;
    i.kind = k;
    i.reg = b.reg.kind;
    i.cmd = b.cmd;
    i.arg = b.reg.number;
    return i;
  }
};

static_assert(sizeof(instruction) == 8);

using instruction_sequence = std::vector<instruction>;

inline std::uint64_t length(const instruction_sequence& seq) { return seq.size(); }

inline instruction_sequence concat(std::span<const instruction_sequence> parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  instruction_sequence out;
  out.reserve(total);
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

inline instruction_sequence concat(std::initializer_list<instruction_sequence> parts) {
  return concat(std::span<const instruction_sequence>(parts.begin(), parts.size()));
}

}  // namespace pga
