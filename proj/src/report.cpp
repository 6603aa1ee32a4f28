#include "facticity/report.hpp"

#include <algorithm>
#include <cmath>

#include "facticity/collapse.hpp"
#include "facticity/intmath.hpp"

namespace facticity {

std::string_view to_string(Taxonomy label) {
  switch (label) {
    case Taxonomy::non_stochastic: return "non_stochastic";
    case Taxonomy::purely_stochastic: return "purely_stochastic";
    case Taxonomy::stochastic_mixed: return "stochastic_mixed";
    case Taxonomy::above_threshold_computable: return "above_threshold_computable";
    case Taxonomy::above_threshold_absolute: return "above_threshold_absolute";
  }
  return "invalid_taxonomy";
}

Taxonomy taxonomy_label(std::uint64_t phi, std::uint64_t k2, std::uint64_t n,
                        std::uint64_t k, TaxonomyParams params) {
  if (k < 1 || k > 24) throw DomainError("taxonomy_label: k must lie in [1, 24]");
  if (phi > k2) throw DomainError("taxonomy_label: phi must be <= k2");
  if (k2 > n + 1) throw DomainError("taxonomy_label: k2 must be <= n + 1");

  // phi equal to k2 (within the band) first: it is the definitional case and
  // must win even when k2 itself is small enough to sit under the
  // small-model line.  phi >= 1 keeps phi = 0 out (k2 is never 0).
  if (phi >= 1 && static_cast<double>(phi) >=
                      (1.0 - params.band) * static_cast<double>(k2)) {
    return Taxonomy::non_stochastic;
  }
  if (phi <= ceil_log2(n) + ceil_log2(k) + params.slack) {
    return Taxonomy::purely_stochastic;
  }
  const double s =
      n == 0 ? 0.0
             : std::clamp(static_cast<double>(k2) / static_cast<double>(n), 0.0, 1.0);
  if (static_cast<double>(phi) > facticity_threshold(k, s, params.slack)) {
    // Absolute when the model is as large as models for this length get.
    if (phi + params.slack >= n / 2) return Taxonomy::above_threshold_absolute;
    return Taxonomy::above_threshold_computable;
  }
  return Taxonomy::stochastic_mixed;
}

std::uint64_t derived_block_size(std::uint64_t n) {
  if (n < 2) return 1;
  const double inner = std::log2(static_cast<double>(n));
  const double k = std::ceil(std::log2(inner));
  const auto clamped = static_cast<std::uint64_t>(std::max(1.0, std::min(24.0, k)));
  return clamped;
}

}  // namespace facticity
