#pragma once

// Execution of single-pass instruction sequences against a Boolean register
// file.
//
// Execution starts at position 1 and only ever moves forward: a plain basic
// instruction advances by 1, a test advances by 1 or 2 depending on the
// reply, and #l advances by l.  Termination (!) is the only way to end a
// run successfully; #0, or advancing past the final instruction, is
// inaction.  Because the position strictly increases, a program of length L
// executes at most L instructions.
//
// machine consumes a program as one or more consecutive spans (feed), which
// lets arbitrarily long programs run without being materialized; execute()
// wraps the common single-span case.  One machine per run; independent runs
// may execute concurrently.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pga/instruction.hpp"

namespace pga {

// Thrown for malformed environments: register numbers outside the register
// file, or a basic instruction violating the get/set discipline.  Distinct
// from inaction, which is a program outcome, not an error.
class execution_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct run_limits {
  // Upper bound on executed instructions; defaults to the program length,
  // which the single-pass property makes a guaranteed bound.
  std::optional<std::uint64_t> max_steps;
};

struct run_metrics {
  std::uint64_t steps_executed = 0;
  std::uint32_t max_input_touched = 0;
  std::uint32_t max_output_touched = 0;
  std::uint32_t max_aux_touched = 0;
};

enum class run_status : std::uint8_t { running, terminated, inaction, limit_exceeded };

inline const char* to_cstring(run_status s) {
  switch (s) {
    case run_status::running: return "running";
    case run_status::terminated: return "terminated";
    case run_status::inaction: return "inaction";
    case run_status::limit_exceeded: return "limit-exceeded";
  }
  return "?";
}

class machine {
 public:
  machine(std::vector<std::uint8_t> inputs, std::size_t output_count, std::size_t aux_count,
          std::uint64_t max_steps)
      : inputs_(std::move(inputs)),
        outputs_(output_count, 0),
        aux_(aux_count, 0),
        max_steps_(max_steps) {}

  // Executes the next consecutive piece of the program.  Returns the status
  // after the span; feeding once a run has ended is a no-op.
  run_status feed(std::span<const instruction> code) {
    if (status_ != run_status::running) return status_;
    const instruction* p = code.data();
    const std::size_t n = code.size();
    std::size_t i = pending_skip_;
    pending_skip_ = 0;
    while (i < n) {
      const instruction& ins = p[i];
      if (metrics_.steps_executed == max_steps_) {
        status_ = run_status::limit_exceeded;
        return status_;
      }
      ++metrics_.steps_executed;
      switch (ins.kind) {
        case instr_kind::plain:
          perform(ins, base_ + i + 1);
          ++i;
          break;
        case instr_kind::test_pos:
          i += perform(ins, base_ + i + 1) ? 1 : 2;
          break;
        case instr_kind::test_neg:
          i += perform(ins, base_ + i + 1) ? 2 : 1;
          break;
        case instr_kind::fwd_jump:
          if (ins.arg == 0) {
            status_ = run_status::inaction;
            stop_position_ = base_ + i + 1;
            return status_;
          }
          i += ins.arg;
          break;
        case instr_kind::halt:
          status_ = run_status::terminated;
          stop_position_ = base_ + i + 1;
          return status_;
      }
    }
    base_ += n;
    pending_skip_ = i - n;
    return status_;
  }

  // Declares the end of the program: a still-running machine reaches
  // inaction at the position it would have proceeded to.
  run_status finish() {
    if (status_ == run_status::running) {
      status_ = run_status::inaction;
      stop_position_ = base_ + pending_skip_ + 1;
    }
    return status_;
  }

  run_status status() const { return status_; }
  const run_metrics& metrics() const { return metrics_; }
  const std::vector<std::uint8_t>& outputs() const { return outputs_; }

  // 1-based position of the termination instruction (terminated) or of the
  // position at which inaction occurred.
  std::uint64_t stop_position() const { return stop_position_; }

  bool input(std::uint32_t number) const { return at(inputs_, number, "in"); }
  bool output(std::uint32_t number) const { return at(outputs_, number, "out"); }
  bool auxiliary(std::uint32_t number) const { return at(aux_, number, "aux"); }

  // Presets an auxiliary register before (parts of) the program run; the
  // initial content of every non-input register is False otherwise.
  void set_auxiliary(std::uint32_t number, bool value) {
    if (number == 0 || number > aux_.size())
      throw execution_error("auxiliary register aux:" + std::to_string(number) +
                            " outside register file of size " + std::to_string(aux_.size()));
    aux_[number - 1] = value ? 1 : 0;
  }

 private:
  bool perform(const instruction& ins, std::uint64_t position) {
    const std::uint32_t idx = ins.arg - 1;  // wraps for 0; caught by the size check
    switch (ins.reg) {
      case reg_kind::input:
        if (idx >= inputs_.size()) fail_range(ins, position, inputs_.size());
        if (ins.cmd != reg_command::get) fail_discipline(ins, position);
        if (ins.arg > metrics_.max_input_touched) metrics_.max_input_touched = ins.arg;
        return inputs_[idx] != 0;
      case reg_kind::output: {
        if (idx >= outputs_.size()) fail_range(ins, position, outputs_.size());
        if (ins.cmd == reg_command::get) fail_discipline(ins, position);
        if (ins.arg > metrics_.max_output_touched) metrics_.max_output_touched = ins.arg;
        const bool v = ins.cmd == reg_command::set_true;
        outputs_[idx] = v ? 1 : 0;
        return v;  // the reply of set:b is b
      }
      case reg_kind::aux: {
        if (idx >= aux_.size()) fail_range(ins, position, aux_.size());
        if (ins.arg > metrics_.max_aux_touched) metrics_.max_aux_touched = ins.arg;
        if (ins.cmd == reg_command::get) return aux_[idx] != 0;
        const bool v = ins.cmd == reg_command::set_true;
        aux_[idx] = v ? 1 : 0;
        return v;
      }
    }
    throw execution_error("corrupt instruction");
  }

  [[noreturn]] void fail_range(const instruction& ins, std::uint64_t position, std::size_t size) {
    throw execution_error("position " + std::to_string(position) + ": register " +
                          detail::register_text(ins.reg, ins.arg) +
                          " outside register file of size " + std::to_string(size));
  }

  [[noreturn]] void fail_discipline(const instruction& ins, std::uint64_t position) {
    throw execution_error("position " + std::to_string(position) + ": register " +
                          detail::register_text(ins.reg, ins.arg) +
                          (ins.cmd == reg_command::get ? " is set-only" : " is get-only"));
  }

  static bool at(const std::vector<std::uint8_t>& regs, std::uint32_t number, const char* kind) {
    if (number == 0 || number > regs.size())
      throw execution_error("register " + std::string(kind) + ":" + std::to_string(number) +
                            " outside register file of size " + std::to_string(regs.size()));
    return regs[number - 1] != 0;
  }

  std::vector<std::uint8_t> inputs_;
  std::vector<std::uint8_t> outputs_;
  std::vector<std::uint8_t> aux_;
  std::uint64_t max_steps_;
  run_metrics metrics_{};
  run_status status_ = run_status::running;
  std::uint64_t base_ = 0;          // absolute position of the last span's end
  std::uint64_t pending_skip_ = 0;  // carry-over when a skip crosses a span boundary
  std::uint64_t stop_position_ = 0;
};

struct execution_outcome {
  run_status status = run_status::inaction;
  std::vector<std::uint8_t> outputs;  // partial writes are visible on inaction
  run_metrics metrics{};
  std::uint64_t stop_position = 0;

  bool terminated() const { return status == run_status::terminated; }
};

struct register_demand {
  std::uint32_t max_input = 0;
  std::uint32_t max_output = 0;
  std::uint32_t max_aux = 0;
};

// Maximum register number referenced per kind; sizes a sufficient
// environment for the program.
inline register_demand required_registers(const instruction_sequence& seq) {
  register_demand d;
  for (const auto& ins : seq) {
    if (!ins.is_basic()) continue;
    switch (ins.reg) {
      case reg_kind::input: d.max_input = std::max(d.max_input, ins.arg); break;
      case reg_kind::output: d.max_output = std::max(d.max_output, ins.arg); break;
      case reg_kind::aux: d.max_aux = std::max(d.max_aux, ins.arg); break;
    }
  }
  return d;
}

inline execution_outcome execute(const instruction_sequence& program,
                                 std::vector<std::uint8_t> inputs, std::size_t output_count,
                                 std::size_t aux_count, run_limits limits = {}) {
  if (limits.max_steps && *limits.max_steps == 0)
    throw std::invalid_argument("max_steps must be at least 1");
  machine m(std::move(inputs), output_count, aux_count,
            limits.max_steps.value_or(program.size()));
  m.feed(program);
  m.finish();
  return {m.status(), m.outputs(), m.metrics(), m.stop_position()};
}

}  // namespace pga
