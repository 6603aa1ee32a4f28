#include "facticity/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "facticity/collapse.hpp"
#include "facticity/entropy.hpp"
#include "facticity/intmath.hpp"
#include "facticity/parallel.hpp"
#include "facticity/rng.hpp"

namespace facticity {

namespace {

// Frame overhead of a payload of n bits, excluding the payload itself.
std::uint64_t frame_overhead(std::uint64_t n) { return sd_len(n) - n; }

}  // namespace

std::uint64_t ModelCandidate::total_bits() const {
  // The tiny epsilon keeps exact-integer data costs (enumerative codes hit
  // 0.0 and lgamma can land a hair above an integer) from ceiling up.
  const double data = std::max(0.0, data_bits);
  return model_bits + static_cast<std::uint64_t>(std::ceil(data - 1e-9));
}

std::string ModelCandidate::name() const {
  switch (id) {
    case ModelId::empty: return "empty";
    case ModelId::bernoulli: return "bernoulli";
    case ModelId::block_markov: return "block_markov(" + std::to_string(order) + ")";
    case ModelId::singleton: return "singleton";
  }
  return "invalid_model";
}

BitString gen_stochastic(const StochasticSpec& spec) {
  if (spec.n < 1) throw DomainError("gen_stochastic: n must be >= 1");
  if (!(spec.entropy >= 0.0 && spec.entropy <= 1.0)) {
    throw DomainError("gen_stochastic: entropy must lie in [0, 1]");
  }
  const double p = inverse_entropy_bisect(spec.entropy);
  Rng rng(spec.seed);
  BitString out;
  out.reserve(spec.n);
  for (std::uint64_t i = 0; i < spec.n; ++i) {
    out.push_back(rng.next_double() < p ? 1 : 0);
  }
  return out;
}

std::vector<ModelCandidate> model_costs(const BitString& x) {
  if (x.empty()) throw DomainError("model_costs: x must be nonempty");
  const std::uint64_t n = x.size();
  const std::uint64_t ones = x.count_ones();

  std::vector<ModelCandidate> out;

  out.push_back({ModelId::empty, 0, 0, static_cast<double>(n)});

  out.push_back({ModelId::bernoulli, 0, frame_overhead(n) + ceil_log2(n + 1),
                 log2_binomial(n, ones)});

  for (unsigned m = 1; m <= 8; ++m) {
    if ((std::uint64_t{1} << (m + 2)) > n) break;
    const std::uint64_t contexts = std::uint64_t{1} << m;
    std::vector<std::uint32_t> ctx_ones(contexts, 0);
    std::vector<std::uint32_t> ctx_total(contexts, 0);
    std::uint64_t ctx = 0;
    const std::uint64_t mask = contexts - 1;
    for (std::uint64_t j = 0; j < n; ++j) {
      if (j >= m) {
        ctx_total[ctx] += 1;
        ctx_ones[ctx] += static_cast<std::uint32_t>(x[j]);
      }
      ctx = ((ctx << 1) | static_cast<std::uint64_t>(x[j])) & mask;
    }
    // Laplace-style point estimate, then 8-bit quantization so the model
    // size is exactly 8 bits per context.
    std::vector<double> q(contexts);
    for (std::uint64_t c = 0; c < contexts; ++c) {
      const double smoothed = (ctx_ones[c] + 0.5) / (ctx_total[c] + 1.0);
      const double quantized =
          std::clamp(std::round(smoothed * 256.0), 1.0, 255.0) / 256.0;
      q[c] = quantized;
    }
    double data = static_cast<double>(m);  // first m bits, 1 bit each
    ctx = 0;
    for (std::uint64_t j = 0; j < n; ++j) {
      if (j >= m) {
        data -= std::log2(x[j] ? q[ctx] : 1.0 - q[ctx]);
      }
      ctx = ((ctx << 1) | static_cast<std::uint64_t>(x[j])) & mask;
    }
    out.push_back({ModelId::block_markov, m,
                   3 + frame_overhead(n) + contexts * 8, data});
  }

  out.push_back({ModelId::singleton, 0, sd_len(n) + n, 0.0});

  return out;
}

FacticityReport estimate(const BitString& x) {
  const std::vector<ModelCandidate> candidates = model_costs(x);
  const ModelCandidate* winner = &candidates.front();
  for (const ModelCandidate& c : candidates) {
    const std::uint64_t total = c.total_bits();
    const std::uint64_t best = winner->total_bits();
    if (total < best || (total == best && c.model_bits < winner->model_bits)) {
      winner = &c;
    }
  }
  const std::uint64_t n = x.size();
  FacticityReport r;
  r.k2 = winner->total_bits();
  r.phi = winner->model_bits;
  r.delta = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(r.k2);
  r.rho = std::max<std::int64_t>(
      0, static_cast<std::int64_t>(r.k2) - static_cast<std::int64_t>(sd_len(r.phi)));
  r.label = taxonomy_label(r.phi, r.k2, n, derived_block_size(n));
  r.certified = false;
  r.model = winner->name();
  return r;
}

double normalized_facticity(std::uint64_t c_hat, std::uint64_t n) {
  if (n < 1) throw DomainError("normalized_facticity: n must be >= 1");
  if (c_hat > n) throw DomainError("normalized_facticity: c_hat must be <= n");
  const double ratio = static_cast<double>(c_hat) / static_cast<double>(n);
  return 4.0 * ratio * (1.0 - ratio);
}

std::vector<SweepRow> sweep(const SweepConfig& config) {
  if (config.k < 2 || config.k > 12) throw DomainError("sweep: k must lie in [2, 12]");
  if (config.grid_points < 2) throw DomainError("sweep: grid_points must be >= 2");
  if (config.reps < 1) throw DomainError("sweep: reps must be >= 1");

  const std::uint64_t n = config.k << config.k;
  const std::uint64_t cells = config.grid_points * config.reps;
  std::vector<SweepRow> rows(cells);

  const auto fill_cell = [&](std::uint64_t cell) {
    const std::uint64_t g = cell / config.reps;
    const std::uint64_t rep = cell % config.reps;
    const double s =
        static_cast<double>(g) / static_cast<double>(config.grid_points - 1);
    const BitString x =
        gen_stochastic({n, s, mix_seed(config.seed, cell)});
    const FacticityReport r = estimate(x);
    SweepRow& row = rows[cell];
    row.s = s;
    row.p = inverse_entropy_bisect(s);
    row.rep = static_cast<unsigned>(rep);
    row.n = n;
    row.k2_hat = r.k2;
    row.phi_hat = r.phi;
    row.rho_hat = r.rho;
    row.delta_hat = r.delta;
    row.label = r.label;
    row.phi_collapse = collapse_prob(config.k, s);
    row.threshold_bits = facticity_threshold(config.k, s, 0);
  };

  const unsigned workers = static_cast<unsigned>(
      std::min<std::uint64_t>(resolve_threads(config.threads), cells));
  if (workers <= 1) {
    for (std::uint64_t cell = 0; cell < cells; ++cell) fill_cell(cell);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t cell = w; cell < cells; cell += workers) {
          fill_cell(cell);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  return rows;
}

}  // namespace facticity
