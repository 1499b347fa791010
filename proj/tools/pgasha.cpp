// Command-line front end: generate SHA-256 register programs, execute
// program files against register contents, run the full hash pipeline, or
// print the size figures for a block count.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pga/harness.hpp"
#include "pga/machine.hpp"
#include "pga/sha256_gen.hpp"
#include "pga/text_format.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw std::runtime_error("failed reading " + path);
  return data;
}

std::vector<std::uint8_t> to_bytes(const std::string& s) {
  return {s.begin(), s.end()};
}

std::vector<std::uint8_t> parse_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw std::runtime_error("hex string must have even length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::runtime_error(std::string("invalid hex digit '") + c + "'");
  };
  std::vector<std::uint8_t> bytes(hex.size() / 2);
  for (std::size_t i = 0; i < bytes.size(); ++i)
    bytes[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  return bytes;
}

void write_program(std::uint64_t blocks, std::uint64_t cap, const std::string& out_path) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + out_path);
    os = &file;
  }
  pga::text_writer sink(*os);
  pga::sha256::emit_program(blocks, sink, cap);
  sink.flush();
  os->flush();
  if (!*os) throw std::runtime_error("failed writing program text");
}

void print_metrics(const pga::run_metrics& m) {
  std::cout << "steps_executed=" << m.steps_executed << '\n'
            << "max_input_touched=" << m.max_input_touched << '\n'
            << "max_output_touched=" << m.max_output_touched << '\n'
            << "max_aux_touched=" << m.max_aux_touched << '\n';
}

int cmd_generate(std::uint64_t blocks, std::uint64_t cap, const std::string& out_path) {
  write_program(blocks, cap, out_path);
  return 0;
}

int cmd_run(const std::string& program_path, const std::string& input_path,
            const std::string& format) {
  const auto program = pga::parse(read_file(program_path));
  const auto input_data = read_file(input_path);

  std::vector<std::uint8_t> inputs;
  if (format == "bits") {
    for (char c : input_data) {
      if (c == '0' || c == '1')
        inputs.push_back(c == '1');
      else if (!std::isspace(static_cast<unsigned char>(c)))
        throw std::runtime_error(std::string("unexpected character '") + c +
                                 "' in bits input");
    }
  } else {  // raw: bytes of the padded message
    inputs = pga::harness::load_input_registers(to_bytes(input_data));
  }

  const auto demand = pga::required_registers(program);
  if (demand.max_input > inputs.size())
    throw std::runtime_error("program reads input register " +
                             std::to_string(demand.max_input) + " but only " +
                             std::to_string(inputs.size()) + " input bits were provided");

  const auto outcome =
      pga::execute(program, std::move(inputs), demand.max_output, demand.max_aux);

  std::cout << "status: " << pga::to_cstring(outcome.status);
  if (outcome.status == pga::run_status::inaction)
    std::cout << " at position " << outcome.stop_position;
  std::cout << '\n';
  std::cout << "outputs: ";
  for (auto bit : outcome.outputs) std::cout << (bit ? '1' : '0');
  std::cout << '\n';
  std::cout << "program_length=" << program.size() << '\n';
  print_metrics(outcome.metrics);
  return outcome.status == pga::run_status::terminated ? 0 : 1;
}

int cmd_hash(const std::optional<std::string>& message_path,
             const std::optional<std::string>& hex, bool no_verify, bool stats,
             const std::string& emit_only, std::uint64_t cap) {
  std::vector<std::uint8_t> message;
  if (message_path) {
    message = to_bytes(read_file(*message_path));
  } else if (hex) {
    message = parse_hex(*hex);
  } else {
    std::string data((std::istreambuf_iterator<char>(std::cin)),
                     std::istreambuf_iterator<char>());
    message = to_bytes(data);
  }

  if (!emit_only.empty()) {
    const auto padded = pga::harness::pad_message(message);
    const std::uint64_t blocks = padded.size() / 64;
    write_program(blocks, cap, emit_only);
    std::cout << "blocks=" << blocks << '\n'
              << "program_length=" << pga::sha256::decimal(pga::sha256::expected_length(blocks))
              << '\n';
    return 0;
  }

  pga::harness::hash_options options;
  options.verify = !no_verify;
  options.block_cap = cap;
  try {
    const auto result = pga::harness::hash(message, options);
    std::cout << pga::to_hex(result.d) << '\n';
    if (stats) {
      std::cout << "blocks=" << result.report.blocks << '\n'
                << "program_length=" << result.report.program_length << '\n';
      print_metrics(result.report.metrics);
    }
  } catch (const pga::harness::verification_error& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

int cmd_stats(std::uint64_t blocks) {
  using wide = pga::sha256::wide_uint;
  std::cout << "blocks=" << blocks << '\n'
            << "expected_length=" << pga::sha256::decimal(pga::sha256::expected_length(blocks))
            << '\n'
            << "input_registers=" << pga::sha256::decimal(wide(512) * blocks) << '\n'
            << "output_registers=" << pga::sha256::output_register_count << '\n'
            << "aux_registers=" << pga::sha256::max_aux_register << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SHA-256 as single-pass Boolean-register instruction sequences"};
  app.require_subcommand(1);

  std::uint64_t blocks = 1;
  std::uint64_t cap = pga::sha256::default_block_cap;
  std::string out_path;
  auto* generate = app.add_subcommand("generate", "emit the N-block program text");
  generate->add_option("--blocks", blocks, "number of 512-bit message blocks")->required();
  generate->add_option("--out", out_path, "output file (default: stdout)");
  generate->add_option("--max-blocks", cap, "raise the practical block-count cap");

  std::string program_path, input_path, in_format = "bits";
  auto* run = app.add_subcommand("run", "execute a program file against input registers");
  run->add_option("--program", program_path, "program text file")->required();
  run->add_option("--input", input_path, "input register file")->required();
  run->add_option("--in-format", in_format, "input file format")
      ->check(CLI::IsMember({"raw", "bits"}));

  std::optional<std::string> message_path, hex;
  bool no_verify = false, stats = false;
  std::string emit_only;
  std::uint64_t hash_cap = pga::sha256::default_block_cap;
  auto* hash = app.add_subcommand("hash", "hash a message through the register machine");
  auto* msg_opt = hash->add_option("--message", message_path, "message file (default: stdin)");
  hash->add_option("--hex", hex, "message as a hex byte string")->excludes(msg_opt);
  hash->add_flag("--no-verify", no_verify, "skip the reference-implementation check");
  hash->add_flag("--stats", stats, "print run metrics");
  hash->add_option("--emit-only", emit_only, "write the program for this message and exit");
  hash->add_option("--max-blocks", hash_cap, "raise the practical block-count cap");

  std::uint64_t stat_blocks = 1;
  auto* stat = app.add_subcommand("stats", "print size figures without generating");
  stat->add_option("--blocks", stat_blocks, "number of 512-bit message blocks")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) return cmd_generate(blocks, cap, out_path);
    if (run->parsed()) return cmd_run(program_path, input_path, in_format);
    if (hash->parsed())
      return cmd_hash(message_path, hex, no_verify, stats, emit_only, hash_cap);
    if (stat->parsed()) return cmd_stats(stat_blocks);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
