#include "facticity/collapse.hpp"

#include <cmath>
#include <string>

#include "facticity/entropy.hpp"
#include "facticity/intmath.hpp"

namespace facticity {

namespace {

void check_entropy_range(double s, const char* who) {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError(std::string(who) + ": s must lie in [0, 1]");
}

void check_block_size(std::uint64_t k, const char* who) {
  if (k < 1 || k > 24) throw DomainError(std::string(who) + ": k must lie in [1, 24]");
}

}  // namespace

double epsilon_no_model(std::uint64_t n, std::uint64_t k, double s) {
  if (k < 1) throw DomainError("epsilon_no_model: k must be >= 1");
  if (n < k) throw DomainError("epsilon_no_model: n must be >= k");
  check_entropy_range(s, "epsilon_no_model");
  const double p = inverse_entropy_bisect(s);
  const double pk = std::pow(p, static_cast<double>(k));
  const double blocks = static_cast<double>(n) / static_cast<double>(k);
  return std::exp(blocks * std::log1p(-pk));
}

double collapse_prob(std::uint64_t k, double s) {
  check_block_size(k, "collapse_prob");
  check_entropy_range(s, "collapse_prob");
  const double p = inverse_entropy_bisect(s);
  const double pk = std::pow(p, static_cast<double>(k));
  return std::exp(std::ldexp(1.0, static_cast<int>(k)) * std::log1p(-pk));
}

double log2_binomial(std::uint64_t n, std::uint64_t m) {
  if (m > n) throw DomainError("log2_binomial: m must be <= n");
  const double ln2 = std::log(2.0);
  return (std::lgamma(static_cast<double>(n) + 1.0) -
          std::lgamma(static_cast<double>(m) + 1.0) -
          std::lgamma(static_cast<double>(n - m) + 1.0)) /
         ln2;
}

double facticity_threshold(std::uint64_t k, double s, std::uint64_t c) {
  check_block_size(k, "facticity_threshold");
  check_entropy_range(s, "facticity_threshold");
  const std::uint64_t blocks = std::uint64_t{1} << k;
  const double occupied = std::ceil(static_cast<double>(blocks) * collapse_prob(k, s));
  return log2_binomial(blocks, static_cast<std::uint64_t>(occupied)) +
         static_cast<double>(k) + std::log2(static_cast<double>(k)) +
         static_cast<double>(c);
}

double max_facticity_bound(std::uint64_t k, std::uint64_t c) {
  check_block_size(k, "max_facticity_bound");
  return std::ldexp(1.0, static_cast<int>(k)) + static_cast<double>(k) +
         std::log2(static_cast<double>(k)) + static_cast<double>(c);
}

std::uint64_t saturation_bound(std::uint64_t u_len) {
  if (u_len < 1) throw DomainError("saturation_bound: u_len must be >= 1");
  const std::uint64_t exponent = u_len + 2 * floor_log2(u_len) + 1;
  if (exponent > 62) throw OverflowError("saturation_bound: exponent exceeds 62 bits");
  return std::uint64_t{1} << exponent;
}

}  // namespace facticity
