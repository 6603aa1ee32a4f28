#pragma once

#include "facticity/errors.hpp"

namespace facticity {

// H(p) = -p log2 p - (1-p) log2 (1-p), in bits.  Domain [0, 1].
double binary_entropy(double p);

// Principal branch W0 of the Lambert W function, w e^w = x, for x >= -1/e.
// Residual |w e^w - x| stays below 1e-12 on [0, 10].
double lambert_w0(double x);

// Inverse of binary_entropy on [0, 1/2]: returns the unique p with
// H(p) = s.  Bisection; |H(p) - s| <= 1e-9.
double inverse_entropy_bisect(double s);

struct ProductLogInverse {
  double value;
  bool in_range;  // true when 1 - value lies in [0, 1/2]
};

// Closed-form candidate for the entropy inverse,
//   value = -s / W0(s) - (1-s) / W0(1-s),
// with u / W0(u) read as its limit 1 when u = 0.  Kept as a diagnostic
// only: evaluated literally it does not reproduce inverse_entropy_bisect
// (1 - value normally falls outside [0, 1/2], which in_range reports), so
// bisection is the normative inverse everywhere in this library.
ProductLogInverse inverse_entropy_productlog(double s);

}  // namespace facticity
