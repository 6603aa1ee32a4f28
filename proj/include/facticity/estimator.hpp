#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "facticity/bitcodec.hpp"
#include "facticity/report.hpp"

namespace facticity {

enum class ModelId { empty, bernoulli, block_markov, singleton };

// One explicit two-part code for x: a model (self-describing header) plus
// the data cost of x under that model.
struct ModelCandidate {
  ModelId id = ModelId::empty;
  unsigned order = 0;       // context bits, block_markov only
  std::uint64_t model_bits = 0;
  double data_bits = 0.0;

  std::uint64_t total_bits() const;
  std::string name() const;  // "empty", "bernoulli", "block_markov(3)", "singleton"
};

// Parameters of an i.i.d. source: length, per-bit entropy, seed.
struct StochasticSpec {
  std::uint64_t n = 0;
  double entropy = 0.0;
  std::uint64_t seed = 0;
};

// Bernoulli(p) bits with p = inverse_entropy_bisect(spec.entropy), drawn
// from a deterministic seeded generator.
BitString gen_stochastic(const StochasticSpec& spec);

// The full candidate list for x:
//   empty          no model; x spelled out verbatim.
//   bernoulli      framed length and ones-count; enumerative code for x.
//   block_markov(m), 1 <= m <= 8 and 2^(m+2) <= n: quantized per-context
//                  one-probabilities (8 bits each); first m bits literal.
//   singleton      the model is {x} itself: framed x, zero data bits.
std::vector<ModelCandidate> model_costs(const BitString& x);

// Two-part compression estimate: minimal total over model_costs, ties going
// to the smaller model.  phi is the winner's model share; the label comes
// from taxonomy_label at block size ceil(log2 log2 n).
FacticityReport estimate(const BitString& x);

// 4 (c/n) ((n-c)/n): unimodal in c with maximum 1 at c = n/2.
double normalized_facticity(std::uint64_t c_hat, std::uint64_t n);

struct SweepRow {
  double s = 0.0;         // grid entropy
  double p = 0.0;         // Bernoulli parameter for s
  unsigned rep = 0;
  std::uint64_t n = 0;
  std::uint64_t k2_hat = 0;
  std::uint64_t phi_hat = 0;
  std::int64_t rho_hat = 0;
  std::int64_t delta_hat = 0;
  Taxonomy label = Taxonomy::purely_stochastic;
  double phi_collapse = 0.0;    // collapse_prob(k, s)
  double threshold_bits = 0.0;  // facticity_threshold(k, s, 0)
};

struct SweepConfig {
  std::uint64_t k = 8;         // block size; string length is k * 2^k
  std::uint64_t grid_points = 41;
  std::uint64_t reps = 5;
  std::uint64_t seed = 0;
  unsigned threads = 0;        // 0 = resolve from environment
};

// Estimates stochastic strings across a uniform entropy grid of [0, 1],
// reps strings per grid point, alongside the analytic curves.  Cell seeds
// are derived from (seed, cell index), so rows are identical no matter how
// cells are scheduled.
std::vector<SweepRow> sweep(const SweepConfig& config);

}  // namespace facticity
