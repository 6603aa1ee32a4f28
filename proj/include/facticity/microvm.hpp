#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "facticity/bitcodec.hpp"

namespace facticity {

// Execution limits.  Step cost of an opcode is max(1, bits appended), so
// max_steps also caps total output work; max_output caps the output length.
struct Budget {
  std::uint64_t max_steps = 0;
  std::uint64_t max_output = 0;
};

inline constexpr std::uint64_t kDefaultMaxOutput = 64;

constexpr Budget default_budget(std::uint64_t max_output = kDefaultMaxOutput) {
  return Budget{4 * max_output * max_output, max_output};
}

enum class RunStatus {
  ok,
  invalid_index,
  abort_budget,
  abort_semantics,
};

std::string_view to_string(RunStatus status);

struct RunOutcome {
  BitString output;
  bool consumed_all = false;
  std::uint64_t steps = 0;
  RunStatus status = RunStatus::invalid_index;

  bool ok() const { return status == RunStatus::ok; }
};

// The machine family indexed by a raw bit string i:
//   i = epsilon      identity: copies the program input verbatim
//   i = "1"          swap: reframes its input, exchanging index and input
//   i = "0" + body   generator program, body an even-length opcode string
//   anything else    invalid (odd program bodies are rejected so that no two
//                    distinct indexes denote the same machine)
enum class IndexKind { identity, swap, program, invalid };

IndexKind parse_index(std::span<const std::uint8_t> index_bits);
IndexKind parse_index(const BitString& index);

// Program opcodes, two bits each, first bit most significant:
//   00 OUT0   append a literal 0
//   01 OUT1   append a literal 1
//   10 CPY    append the next unread bit of the program input
//   11 DBL    append a copy of the entire current output
inline constexpr int kOpOut0 = 0;
inline constexpr int kOpOut1 = 1;
inline constexpr int kOpCopy = 2;
inline constexpr int kOpDouble = 3;

// Runs the universal machine on a two-part code w = frame(i) + p.  The run
// succeeds only if the machine halts within budget having consumed all of p;
// only successful runs define a value of U.  Failure modes arrive as status
// values, never exceptions (a malformed w is data, not a caller bug); on
// failure, output holds whatever had been emitted before the abort.
RunOutcome run(const BitString& w, const Budget& b);

}  // namespace facticity
