#include "facticity/entropy.hpp"

#include <cmath>

namespace facticity {

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binary_entropy: p must lie in [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double lambert_w0(double x) {
  const double branch_point = -std::exp(-1.0);
  if (x < branch_point) throw DomainError("lambert_w0: x must be >= -1/e");
  if (x == 0.0) return 0.0;

  // Initial guesses follow Corless et al. (1996): a branch-point series near
  // -1/e, the Taylor series near 0, and log1p(x), which tracks W0 within a
  // few percent on all of [1/4, inf), elsewhere.  Halley then converges
  // cubically, so a rough start suffices.
  double w;
  if (x < -0.25) {
    const double p = std::sqrt(2.0 * (std::exp(1.0) * x + 1.0));
    w = -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0;
  } else if (x < 0.25) {
    w = x * (1.0 - x + 1.5 * x * x);
  } else {
    w = std::log1p(x);
  }

  // Halley iteration on f(w) = w e^w - x.
  for (int iter = 0; iter < 64; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (std::abs(f) <= 1e-14 * (1.0 + std::abs(x))) break;
    const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
    w -= f / denom;
  }
  return w;
}

double inverse_entropy_bisect(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("inverse_entropy_bisect: s must lie in [0, 1]");
  if (s == 0.0) return 0.0;
  if (s == 1.0) return 0.5;
  double lo = 0.0;
  double hi = 0.5;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double h = binary_entropy(mid);
    if (std::abs(h - s) <= 1e-12) return mid;
    if (h < s) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

ProductLogInverse inverse_entropy_productlog(double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw DomainError("inverse_entropy_productlog: s must lie in [0, 1]");
  }
  // u / W0(u) tends to 1 as u tends to 0 (W0(u) = u - u^2 + ...).
  const auto term = [](double u) {
    if (u == 0.0) return 1.0;
    return u / lambert_w0(u);
  };
  const double value = -term(s) - term(1.0 - s);
  const double complement = 1.0 - value;
  return {value, complement >= 0.0 && complement <= 0.5};
}

}  // namespace facticity
