#include "doctest.h"

#include "facticity/microvm.hpp"

#include <string>
#include <vector>

using namespace facticity;

namespace {

BitString bs(const std::string& text) { return BitString::from_text(text); }

BitString cat(const BitString& a, const BitString& b) {
  BitString r = a;
  r.append(b);
  return r;
}

// All bit strings of length 0..max_len in shortlex order.
std::vector<BitString> all_strings(std::size_t max_len) {
  std::vector<BitString> out;
  out.emplace_back();
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      BitString s;
      for (std::size_t i = 0; i < len; ++i)
        s.push_back(static_cast<std::uint8_t>((v >> (len - 1 - i)) & 1));
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("index classification") {
  CHECK(parse_index(bs("")) == IndexKind::identity);
  CHECK(parse_index(bs("1")) == IndexKind::swap);
  CHECK(parse_index(bs("11")) == IndexKind::invalid);
  CHECK(parse_index(bs("10")) == IndexKind::invalid);
  CHECK(parse_index(bs("0")) == IndexKind::program);     // empty body
  CHECK(parse_index(bs("01")) == IndexKind::invalid);    // odd body
  CHECK(parse_index(bs("000")) == IndexKind::program);
  CHECK(parse_index(bs("0000")) == IndexKind::invalid);
  CHECK(parse_index(bs("00000")) == IndexKind::program);
  CHECK(parse_index(bs("0001111")) == IndexKind::program);
}

TEST_CASE("identity machine copies its program input") {
  const auto r = run(bs("10110"), default_budget());
  REQUIRE(r.ok());
  CHECK(r.output == bs("0110"));
  CHECK(r.consumed_all);
  CHECK(r.steps == 4);

  const auto empty = run(bs("1"), default_budget());
  REQUIRE(empty.ok());
  CHECK(empty.output.empty());
  CHECK(empty.steps == 0);
}

TEST_CASE("generator program runs its opcodes") {
  // OUT0 then DBL twice: "0" -> "00" -> "0000".
  const auto r = run(encode_sd(bs("0001111")), default_budget());
  REQUIRE(r.ok());
  CHECK(r.output == bs("0000"));
  CHECK(r.consumed_all);
  CHECK(r.steps == 4);  // 1 + 1 + 2 appended bits
}

TEST_CASE("swap reframes index and program input") {
  // frame("1") + frame("01") + epsilon reduces to frame(epsilon) + "01".
  const auto r = run(bs("010101101"), default_budget());
  REQUIRE(r.ok());
  CHECK(r.output == bs("01"));
  CHECK(r.steps == 3);  // dispatch + two copied bits

  // Nested swaps unwind one layer per dispatch.
  BitString w = cat(bs("0101"), encode_sd(bs("01101")));
  w.push_back(1);
  const auto nested = run(w, default_budget());
  REQUIRE(nested.ok());
  CHECK(nested.output == bs("01"));
  CHECK(nested.steps == 4);
}

TEST_CASE("swap law holds for small indexes and inputs") {
  const std::vector<std::string> indexes = {"",    "1",   "0",    "00",
                                            "000", "001", "010",  "011",
                                            "11",  "01",  "00000"};
  const Budget b = default_budget();
  for (const auto& itext : indexes) {
    const BitString i = bs(itext);
    for (const auto& p : all_strings(3)) {
      const RunOutcome direct = run(cat(encode_sd(i), p), b);
      BitString swapped = encode_sd(bs("1"));
      swapped.append(encode_sd(p));
      swapped.append(i);
      const RunOutcome via_swap = run(swapped, b);
      CHECK(via_swap.status == direct.status);
      CHECK(via_swap.output == direct.output);
      if (direct.ok()) CHECK(via_swap.steps == direct.steps + 1);
    }
  }
}

TEST_CASE("program input must be fully consumed") {
  // Empty program body with leftover input bits.
  const auto leftover = run(cat(encode_sd(bs("0")), bs("1")), default_budget());
  CHECK(leftover.status == RunStatus::abort_semantics);
  CHECK_FALSE(leftover.consumed_all);

  // Empty program body with no input succeeds with empty output.
  const auto clean = run(encode_sd(bs("0")), default_budget());
  REQUIRE(clean.ok());
  CHECK(clean.output.empty());

  // OUT0 leaves its one-bit input unread; partial output is preserved.
  const auto out0 = run(cat(encode_sd(bs("000")), bs("1")), default_budget());
  CHECK(out0.status == RunStatus::abort_semantics);
  CHECK(out0.output == bs("0"));
}

TEST_CASE("semantic aborts") {
  // CPY with exhausted input.
  const auto cpy = run(encode_sd(bs("010")), default_budget());
  CHECK(cpy.status == RunStatus::abort_semantics);

  // DBL with empty output.
  const auto dbl = run(encode_sd(bs("011")), default_budget());
  CHECK(dbl.status == RunStatus::abort_semantics);

  // Swap whose remainder is not a valid frame.
  const auto bad_swap = run(bs("0101"), default_budget());
  CHECK(bad_swap.status == RunStatus::abort_semantics);
}

TEST_CASE("invalid indexes never execute") {
  // frame("11"): the swap index admits no continuation bits.
  const auto r = run(cat(encode_sd(bs("11")), bs("0")), default_budget());
  CHECK(r.status == RunStatus::invalid_index);
  CHECK(r.output.empty());

  // Truncated frame.
  const auto t = run(bs("00"), default_budget());
  CHECK(t.status == RunStatus::invalid_index);

  // Odd program body.
  const auto odd = run(encode_sd(bs("01")), default_budget());
  CHECK(odd.status == RunStatus::invalid_index);
}

TEST_CASE("budget aborts") {
  // Identity input longer than max_output.
  const auto wide = run(bs("10101"), Budget{100, 3});
  CHECK(wide.status == RunStatus::abort_budget);

  // Identity input costing more steps than allowed.
  const auto slow = run(bs("10101"), Budget{3, 64});
  CHECK(slow.status == RunStatus::abort_budget);

  // OUT0 then DBL x7 would reach 128 bits; the 64-bit cap stops the last
  // doubling and preserves the 64 bits emitted so far.
  BitString gen;
  gen.push_back(0);
  gen.push_back(0);
  for (int i = 0; i < 7; ++i) {
    gen.push_back(1);
    gen.push_back(1);
  }
  BitString idx;
  idx.push_back(0);
  idx.append(gen);
  const auto burst = run(encode_sd(idx), default_budget());
  CHECK(burst.status == RunStatus::abort_budget);
  CHECK(burst.output.size() == 64);
  CHECK(burst.output.count_ones() == 0);

  // The same program succeeds once the output budget allows 128 bits.
  const auto roomy = run(encode_sd(idx), default_budget(128));
  REQUIRE(roomy.ok());
  CHECK(roomy.output.size() == 128);

  CHECK_THROWS_AS(run(bs("1"), Budget{0, 64}), DomainError);
  CHECK_THROWS_AS(run(bs("1"), Budget{64, 0}), DomainError);
}

TEST_CASE("runs are deterministic and monotone in budget") {
  const Budget small = default_budget(32);
  const Budget big{small.max_steps * 4, small.max_output * 4};
  for (const auto& w : all_strings(12)) {
    const RunOutcome a = run(w, small);
    const RunOutcome b = run(w, small);
    CHECK(a.status == b.status);
    CHECK(a.output == b.output);
    CHECK(a.steps == b.steps);
    CHECK(a.consumed_all == b.consumed_all);
    // Anything that succeeds in the small budget is unchanged in the big one.
    if (a.ok()) {
      const RunOutcome c = run(w, big);
      REQUIRE(c.ok());
      CHECK(c.output == a.output);
      CHECK(c.steps == a.steps);
    }
    // Invalid indexes are rejected before any budget is consulted.
    if (a.status == RunStatus::invalid_index) {
      CHECK(run(w, Budget{1, 1}).status == RunStatus::invalid_index);
    }
  }
}
