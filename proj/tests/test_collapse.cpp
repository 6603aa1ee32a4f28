#include "doctest.h"

#include "facticity/collapse.hpp"
#include "facticity/entropy.hpp"
#include "facticity/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>

using namespace facticity;
using boost::multiprecision::cpp_int;

namespace {

// Exact binomial coefficient via the multiplicative recurrence; every
// intermediate division is exact because each prefix product is C(n, i)*i!.
cpp_int exact_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  cpp_int r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// log2 of a positive big integer: take the top 53 bits as a double mantissa.
// Truncation of lower bits perturbs the result by less than 2^-52/ln 2.
double log2_exact(const cpp_int& v) {
  const long top = static_cast<long>(boost::multiprecision::msb(v));
  if (top <= 52) return std::log2(v.convert_to<double>());
  const long shift = top - 52;
  const cpp_int scaled = v >> shift;
  return std::log2(scaled.convert_to<double>()) + static_cast<double>(shift);
}

}  // namespace

TEST_CASE("log2_binomial matches the exact big-integer oracle") {
  CHECK(log2_binomial(16, 6) == doctest::Approx(log2_exact(exact_binomial(16, 6))).epsilon(1e-9));
  CHECK(log2_binomial(256, 128) ==
        doctest::Approx(log2_exact(exact_binomial(256, 128))).epsilon(1e-9));
  CHECK(log2_binomial(10000, 1234) ==
        doctest::Approx(log2_exact(exact_binomial(10000, 1234))).epsilon(1e-9));
  CHECK(log2_binomial(1000000, 1000) ==
        doctest::Approx(log2_exact(exact_binomial(1000000, 1000))).epsilon(1e-9));
}

TEST_CASE("log2_binomial anchors and edge cases") {
  CHECK(log2_binomial(16, 6) == doctest::Approx(12.96722626).epsilon(1e-8));
  CHECK(log2_binomial(256, 128) == doctest::Approx(251.672843057).epsilon(1e-8));
  CHECK(log2_binomial(10, 0) == doctest::Approx(0.0));
  CHECK(log2_binomial(10, 10) == doctest::Approx(0.0));
  CHECK(log2_binomial(1, 1) == doctest::Approx(0.0));
  // Symmetry C(n,k) = C(n,n-k).
  for (std::uint64_t k = 0; k <= 20; ++k)
    CHECK(log2_binomial(20, k) == doctest::Approx(log2_binomial(20, 20 - k)).epsilon(1e-12));
}

TEST_CASE("collapse probability anchors") {
  // Direct closed-form oracle at full entropy: p = 1/2, so
  // phi_4(1) = (1 - 2^-4)^(2^4) = (15/16)^16 computed independently below.
  double direct = 1.0;
  for (int i = 0; i < 16; ++i) direct *= 15.0 / 16.0;
  CHECK(collapse_prob(4, 1.0) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(collapse_prob(4, 1.0) == doctest::Approx(0.3560741305).epsilon(1e-8));
  CHECK(collapse_prob(8, 1.0) == doctest::Approx(0.3671597549).epsilon(1e-8));

  // At s = 0.5 the no-model probability is close to 1 but not equal to it.
  const double at_half = collapse_prob(8, 0.5);
  CHECK(at_half == doctest::Approx(0.9999945013).epsilon(1e-6));
  CHECK(at_half < 1.0);

  // Zero entropy forces p = 0, so no block can be all ones.
  CHECK(collapse_prob(8, 0.0) == doctest::Approx(1.0));
  CHECK(collapse_prob(1, 1.0) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("collapse probability is monotone in entropy and block size") {
  // Higher entropy raises p and lowers the chance that every block misses.
  double prev = collapse_prob(8, 0.0);
  for (int i = 1; i <= 10; ++i) {
    const double cur = collapse_prob(8, i / 10.0);
    CHECK(cur <= prev + 1e-15);
    prev = cur;
  }
}

TEST_CASE("epsilon_no_model generalizes collapse_prob") {
  // With n = k * 2^k trials the two expressions agree exactly.
  CHECK(epsilon_no_model(8 << 8, 8, 1.0) == doctest::Approx(collapse_prob(8, 1.0)).epsilon(1e-12));
  CHECK(epsilon_no_model(2048, 8, 1.0) == doctest::Approx(collapse_prob(8, 1.0)).epsilon(1e-12));
  // Fewer blocks means a larger no-hit probability.
  CHECK(epsilon_no_model(1024, 8, 1.0) > collapse_prob(8, 1.0));
}

TEST_CASE("collapse argument validation") {
  CHECK_THROWS_AS(collapse_prob(0, 0.5), DomainError);
  CHECK_THROWS_AS(collapse_prob(25, 0.5), DomainError);
  CHECK_THROWS_AS(collapse_prob(8, -0.1), DomainError);
  CHECK_THROWS_AS(collapse_prob(8, 1.1), DomainError);
}

TEST_CASE("facticity threshold anchors") {
  CHECK(facticity_threshold(4, 1.0, 0) == doctest::Approx(18.97).epsilon(2e-3));
  CHECK(facticity_threshold(4, 1.0, 0) ==
        doctest::Approx(log2_exact(exact_binomial(16, 6)) + 4.0 + 2.0).epsilon(1e-9));

  // Find the entropy where half the blocks are expected to survive.  The
  // loop keeps collapse_prob(8, lo) > 1/2 >= collapse_prob(8, hi), so the
  // expected-count ceiling lands on 128 from hi and on 129 from lo.
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (collapse_prob(8, mid) > 0.5)
      lo = mid;
    else
      hi = mid;
  }
  const double t = facticity_threshold(8, hi, 0);
  CHECK(t == doctest::Approx(262.67).epsilon(5e-4));
  CHECK(t == doctest::Approx(log2_exact(exact_binomial(256, 128)) + 8.0 + 3.0).epsilon(1e-6));
  CHECK(facticity_threshold(8, lo, 0) ==
        doctest::Approx(log2_exact(exact_binomial(256, 129)) + 8.0 + 3.0).epsilon(1e-6));
}

TEST_CASE("threshold never exceeds the saturation-style maximum") {
  for (unsigned k = 2; k <= 12; ++k) {
    for (int i = 0; i <= 20; ++i) {
      const double s = i / 20.0;
      CHECK(facticity_threshold(k, s, 4) <= max_facticity_bound(k, 4) + 1.0);
    }
  }
}

TEST_CASE("maximum facticity bound anchors") {
  CHECK(max_facticity_bound(8, 0) == doctest::Approx(256 + 8 + 3).epsilon(1e-12));
  CHECK(max_facticity_bound(1, 0) == doctest::Approx(2 + 1 + 0).epsilon(1e-12));
  // Relative overhead above 2^k shrinks as k grows.
  double prev_ratio = max_facticity_bound(2, 0) / 4.0;
  for (unsigned k = 3; k <= 20; ++k) {
    const double ratio = max_facticity_bound(k, 0) / std::ldexp(1.0, static_cast<int>(k));
    CHECK(ratio < prev_ratio);
    prev_ratio = ratio;
  }
}

TEST_CASE("saturation bound") {
  CHECK(saturation_bound(7) == (std::uint64_t{1} << 12));
  CHECK(saturation_bound(1) == 4);
  CHECK_THROWS_AS(saturation_bound(0), DomainError);
  CHECK_THROWS_AS(saturation_bound(60), OverflowError);
}
