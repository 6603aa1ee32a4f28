#pragma once

#include <cstdint>

#include "facticity/errors.hpp"

namespace facticity {

// Probability that a string of n bits drawn with per-bit entropy s contains
// no all-ones block of k bits: (1 - p^k)^(n/k) with p the entropy inverse.
double epsilon_no_model(std::uint64_t n, std::uint64_t k, double s);

// Same curve at the canonical length n = k * 2^k, i.e. (1 - p^k)^(2^k).
// Evaluated in log space so large exponents do not underflow.
double collapse_prob(std::uint64_t k, double s);

// log2 of the binomial coefficient C(n, m) via log-gamma.  Absolute error
// stays below 1e-6 for n up to 1e6.
double log2_binomial(std::uint64_t n, std::uint64_t m);

// Optimal model size, in bits, for a stochastic string with block size k and
// per-bit entropy s: log2 C(2^k, ceil(2^k * collapse_prob)) + k + log2 k + c.
double facticity_threshold(std::uint64_t k, double s, std::uint64_t c = 0);

// Upper bound on the facticity of any string of length n = k * 2^k:
// 2^k + k + log2 k + c.
double max_facticity_bound(std::uint64_t k, std::uint64_t c = 0);

// Saturation point of a universal machine whose index takes u_len bits:
// 2^(u_len + 2*floor(log2 u_len) + 1).  Guarded against 64-bit overflow.
std::uint64_t saturation_bound(std::uint64_t u_len);

}  // namespace facticity
