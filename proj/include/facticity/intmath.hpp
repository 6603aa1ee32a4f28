#pragma once

#include <bit>
#include <cstdint>

namespace facticity {

// floor(log2(v)) for v >= 1.
constexpr std::uint64_t floor_log2(std::uint64_t v) {
  return static_cast<std::uint64_t>(std::bit_width(v)) - 1;
}

// ceil(log2(v)); 0 for v <= 1.
constexpr std::uint64_t ceil_log2(std::uint64_t v) {
  if (v <= 1) return 0;
  return static_cast<std::uint64_t>(std::bit_width(v - 1));
}

}  // namespace facticity
