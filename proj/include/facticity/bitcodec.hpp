#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "facticity/errors.hpp"
#include "facticity/intmath.hpp"

namespace facticity {

// A finite bit sequence.  Stored one bit per byte: the machine enumerates
// strings of a few tens of bits and the estimator scans kilobit strings, so
// direct indexing beats packed storage everywhere it matters.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::span<const std::uint8_t> bits)
      : bits_(bits.begin(), bits.end()) {}

  // Parses a string of '0'/'1' characters.
  static BitString from_text(std::string_view text);
  // Unpacks raw bytes, most significant bit of each byte first.
  static BitString from_bytes(std::span<const std::uint8_t> bytes);
  static BitString zeros(std::size_t n);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i]; }

  void push_back(int bit) { bits_.push_back(static_cast<std::uint8_t>(bit & 1)); }
  void append(std::span<const std::uint8_t> bits) {
    bits_.insert(bits_.end(), bits.begin(), bits.end());
  }
  void append(const BitString& other) { append(other.bits()); }
  // Appends a copy of the current contents (self-append done safely).
  void append_self();
  void reserve(std::size_t n) { bits_.reserve(n); }
  void clear() { bits_.clear(); }

  std::span<const std::uint8_t> bits() const { return bits_; }
  BitString slice(std::size_t pos, std::size_t len) const {
    return BitString(std::span<const std::uint8_t>(bits_).subspan(pos, len));
  }

  std::size_t count_ones() const;
  std::string to_text() const;

  bool operator==(const BitString& other) const { return bits_ == other.bits_; }

 private:
  std::vector<std::uint8_t> bits_;
};

// Orders by length, then lexicographically.  Matches enumeration order.
struct ShortlexLess {
  bool operator()(const BitString& a, const BitString& b) const;
};

struct BitStringHash {
  std::size_t operator()(const BitString& s) const;
};

// Framed length of a payload of c bits: c + 2*floor(log2(c+1)) + 1.
constexpr std::uint64_t sd_len(std::uint64_t payload_len) {
  return payload_len + 2 * floor_log2(payload_len + 1) + 1;
}

// Prefix-free frame around an arbitrary payload x.  With c = |x| and
// v = c + 1, the frame is 0^L 1 B x where L = floor(log2 v) and B holds the
// L bits of v below its leading one.  Decoding reads the unary L, then B,
// recovers c, then takes c payload bits; anything after that is untouched.
BitString encode_sd(std::span<const std::uint8_t> payload);
BitString encode_sd(const BitString& payload);

// Splits a stream into its leading frame's payload and the remainder.
// Throws TruncatedFrame when the stream ends inside the frame.
std::pair<BitString, BitString> decode_sd(const BitString& stream);

// Cursor variant: parses the frame starting at pos, returns the payload as a
// view into `bits`, and advances pos past payload and frame.
std::span<const std::uint8_t> decode_sd_at(std::span<const std::uint8_t> bits,
                                           std::size_t& pos);

}  // namespace facticity
