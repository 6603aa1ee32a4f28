#include "facticity/bitcodec.hpp"

#include <algorithm>

namespace facticity {

BitString BitString::from_text(std::string_view text) {
  BitString out;
  out.reserve(text.size());
  for (char ch : text) {
    if (ch == '0') {
      out.push_back(0);
    } else if (ch == '1') {
      out.push_back(1);
    } else {
      throw DomainError("bit text may contain only '0' and '1'");
    }
  }
  return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes) {
  BitString out;
  out.reserve(bytes.size() * 8);
  for (std::uint8_t byte : bytes) {
    for (int shift = 7; shift >= 0; --shift) {
      out.push_back((byte >> shift) & 1);
    }
  }
  return out;
}

BitString BitString::zeros(std::size_t n) {
  BitString out;
  out.bits_.assign(n, 0);
  return out;
}

void BitString::append_self() {
  const std::size_t n = bits_.size();
  bits_.reserve(2 * n);
  auto first = bits_.begin();
  bits_.insert(bits_.end(), first, first + static_cast<std::ptrdiff_t>(n));
}

std::size_t BitString::count_ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::string BitString::to_text() const {
  std::string out;
  out.reserve(bits_.size());
  for (std::uint8_t b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

bool ShortlexLess::operator()(const BitString& a, const BitString& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  auto sa = a.bits();
  auto sb = b.bits();
  return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

std::size_t BitStringHash::operator()(const BitString& s) const {
  // FNV-1a over the bit bytes, seeded with the length.
  std::uint64_t h = 1469598103934665603ull ^ (s.size() * 1099511628211ull);
  for (std::uint8_t b : s.bits()) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

BitString encode_sd(std::span<const std::uint8_t> payload) {
  const std::uint64_t v = static_cast<std::uint64_t>(payload.size()) + 1;
  const std::uint64_t level = floor_log2(v);
  BitString out;
  out.reserve(payload.size() + 2 * level + 1);
  for (std::uint64_t i = 0; i < level; ++i) out.push_back(0);
  out.push_back(1);
  for (std::uint64_t i = level; i-- > 0;) out.push_back((v >> i) & 1);
  out.append(payload);
  return out;
}

BitString encode_sd(const BitString& payload) { return encode_sd(payload.bits()); }

std::span<const std::uint8_t> decode_sd_at(std::span<const std::uint8_t> bits,
                                           std::size_t& pos) {
  std::size_t p = pos;
  std::uint64_t level = 0;
  while (true) {
    if (p >= bits.size()) throw TruncatedFrame("frame header runs past end of stream");
    if (bits[p++] == 1) break;
    ++level;
  }
  if (level > 62) throw TruncatedFrame("frame header level exceeds representable lengths");
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < level; ++i) {
    if (p >= bits.size()) throw TruncatedFrame("frame length field runs past end of stream");
    v = (v << 1) | bits[p++];
  }
  const std::uint64_t payload_len = v - 1;
  if (p + payload_len > bits.size()) {
    throw TruncatedFrame("frame payload runs past end of stream");
  }
  auto payload = bits.subspan(p, static_cast<std::size_t>(payload_len));
  pos = p + static_cast<std::size_t>(payload_len);
  return payload;
}

std::pair<BitString, BitString> decode_sd(const BitString& stream) {
  std::size_t pos = 0;
  auto payload = decode_sd_at(stream.bits(), pos);
  BitString rest(stream.bits().subspan(pos));
  return {BitString(payload), std::move(rest)};
}

}  // namespace facticity
