#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "facticity/errors.hpp"

namespace facticity {

// String classes under two-part compression, keyed off how the model share
// phi relates to the total k2 and to the analytic threshold curves.
enum class Taxonomy {
  non_stochastic,
  purely_stochastic,
  stochastic_mixed,
  above_threshold_computable,
  above_threshold_absolute,
};

std::string_view to_string(Taxonomy label);

struct TaxonomyParams {
  // Slack added to the small-model line ceil(log2 n) + ceil(log2 k), and to
  // the threshold curve, absorbing machine-dependent constants.
  std::uint64_t slack = 4;
  // Relative dead-band for calling phi "equal to" k2.
  double band = 0.05;
};

// Labels a string with model share phi, total k2, length n, block size k.
// Order of the rules: phi at (or within band of) k2 is non-stochastic; a
// model no bigger than the small-model line is purely stochastic; a model
// above the analytic threshold for this length's entropy rate is one of the
// above-threshold classes, absolute when phi + slack reaches n/2; everything
// between is mixed.
Taxonomy taxonomy_label(std::uint64_t phi, std::uint64_t k2, std::uint64_t n,
                        std::uint64_t k, TaxonomyParams params = {});

// Block size used when labeling estimated reports: ceil(log2 log2 n),
// clamped to [1, 24].
std::uint64_t derived_block_size(std::uint64_t n);

struct FacticityReport {
  std::uint64_t k2 = 0;      // total two-part code length, bits
  std::uint64_t phi = 0;     // model share, bits
  std::int64_t delta = 0;    // randomness deficiency |x| - k2
  std::int64_t rho = 0;      // residual entropy k2 - sd_len(phi)
  Taxonomy label = Taxonomy::purely_stochastic;
  bool certified = false;    // true only for enumerated-exact values
  std::string model;         // winning model id, estimator reports only
};

}  // namespace facticity
