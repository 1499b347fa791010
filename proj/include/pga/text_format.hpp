#pragma once

// Textual interchange format for instruction sequences, one instruction per
// line:
//
//   in:5.get        plain basic instruction
//   aux:3.set:t     (set:t / set:f spell the Boolean written)
//   +out:1.set:f    positive test
//   -aux:12.get     negative test
//   #12             forward jump
//   !               termination
//
// Every line is terminated by a single '\n'; no other whitespace is allowed
// and numbers are decimal without leading zeros.  parse() is the exact
// inverse of serialize() on this grammar.

#include <charconv>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "pga/instruction.hpp"

namespace pga {

class parse_error : public std::runtime_error {
 public:
  parse_error(std::uint64_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::uint64_t line() const { return line_; }

 private:
  std::uint64_t line_;
};

inline void append_line(std::string& out, const instruction& ins) {
  switch (ins.kind) {
    case instr_kind::halt:
      out += "!\n";
      return;
    case instr_kind::fwd_jump: {
      char buf[12];
      auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), ins.arg);
      out += '#';
      out.append(buf, p);
      out += '\n';
      return;
    }
    case instr_kind::test_pos:
      out += '+';
      break;
    case instr_kind::test_neg:
      out += '-';
      break;
    case instr_kind::plain:
      break;
  }
  out += to_cstring(ins.reg);
  out += ':';
  char buf[12];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), ins.arg);
  out.append(buf, p);
  switch (ins.cmd) {
    case reg_command::get: out += ".get"; break;
    case reg_command::set_false: out += ".set:f"; break;
    case reg_command::set_true: out += ".set:t"; break;
  }
  out += '\n';
}

inline std::string serialize(const instruction_sequence& seq) {
  std::string out;
  out.reserve(seq.size() * 12);
  for (const auto& ins : seq) append_line(out, ins);
  return out;
}

namespace detail {

// Decimal natural number, no leading zeros, bounded by uint32.
inline bool parse_number(std::string_view& rest, std::uint32_t& value) {
  if (rest.empty() || rest.front() < '0' || rest.front() > '9') return false;
  if (rest.front() == '0' && rest.size() > 1 && rest[1] >= '0' && rest[1] <= '9') return false;
  auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc()) return false;
  rest.remove_prefix(static_cast<std::size_t>(p - rest.data()));
  return true;
}

inline bool consume(std::string_view& rest, std::string_view token) {
  if (!rest.starts_with(token)) return false;
  rest.remove_prefix(token.size());
  return true;
}

inline instruction parse_line(std::string_view line, std::uint64_t line_no) {
  if (line.empty()) throw parse_error(line_no, "empty line");

  if (line == "!") return instruction::halt();

  if (line.front() == '#') {
    auto rest = line.substr(1);
    std::uint32_t distance = 0;
    if (!parse_number(rest, distance) || !rest.empty())
      throw parse_error(line_no, "malformed jump instruction '" + std::string(line) + "'");
    return instruction::fwd_jump(distance);
  }

  instr_kind kind = instr_kind::plain;
  auto rest = line;
  if (rest.front() == '+') {
    kind = instr_kind::test_pos;
    rest.remove_prefix(1);
  } else if (rest.front() == '-') {
    kind = instr_kind::test_neg;
    rest.remove_prefix(1);
  }

  reg_kind reg{};
  if (consume(rest, "in:")) {
    reg = reg_kind::input;
  } else if (consume(rest, "out:")) {
    reg = reg_kind::output;
  } else if (consume(rest, "aux:")) {
    reg = reg_kind::aux;
  } else {
    throw parse_error(line_no, "unrecognized instruction '" + std::string(line) + "'");
  }

  std::uint32_t number = 0;
  if (!parse_number(rest, number))
    throw parse_error(line_no, "malformed register number in '" + std::string(line) + "'");

  reg_command cmd{};
  if (consume(rest, ".get")) {
    cmd = reg_command::get;
  } else if (consume(rest, ".set:t")) {
    cmd = reg_command::set_true;
  } else if (consume(rest, ".set:f")) {
    cmd = reg_command::set_false;
  } else {
    throw parse_error(line_no, "malformed register command in '" + std::string(line) + "'");
  }
  if (!rest.empty())
    throw parse_error(line_no, "trailing characters in '" + std::string(line) + "'");

  basic_instruction b{{reg, number}, cmd};
  if (!is_valid(b))
    throw parse_error(line_no, "invalid basic instruction '" + std::string(line) +
                                   "' (input registers are get-only, output registers "
                                   "set-only, numbering starts at 1)");

  switch (kind) {
    case instr_kind::test_pos: return instruction::test_pos(b);
    case instr_kind::test_neg: return instruction::test_neg(b);
    default: return instruction::plain(b);
  }
}

}  // namespace detail

inline instruction_sequence parse(std::string_view text) {
  instruction_sequence seq;
  seq.reserve(text.size() / 8);
  std::uint64_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    if (nl == std::string_view::npos)
      throw parse_error(line_no, "missing newline at end of input");
    seq.push_back(detail::parse_line(text.substr(0, nl), line_no));
    text.remove_prefix(nl + 1);
  }
  return seq;
}

// Buffered sink writing the textual format to a stream; usable wherever an
// instruction sink is expected.
class text_writer {
 public:
  explicit text_writer(std::ostream& os) : os_(&os) { buffer_.reserve(chunk_size + 16); }

  void operator()(const instruction& ins) {
    append_line(buffer_, ins);
    if (buffer_.size() >= chunk_size) flush();
  }

  void flush() {
    if (!buffer_.empty()) {
      os_->write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
      buffer_.clear();
    }
  }

 private:
  static constexpr std::size_t chunk_size = 1u << 20;
  std::ostream* os_;
  std::string buffer_;
};

}  // namespace pga
