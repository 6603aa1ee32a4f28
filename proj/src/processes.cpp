#include "facticity/processes.hpp"

#include <cmath>

#include "facticity/errors.hpp"
#include "facticity/estimator.hpp"

namespace facticity {

std::string_view to_string(ProcessClass c) {
  switch (c) {
    case ProcessClass::information_discarding: return "information_discarding";
    case ProcessClass::self_organizing: return "self_organizing";
    case ProcessClass::reversible: return "reversible";
    case ProcessClass::random: return "random";
    case ProcessClass::factic: return "factic";
    case ProcessClass::unclassified: return "unclassified";
  }
  return "invalid_class";
}

namespace {

int banded_sign(double z, double eta) {
  if (std::abs(z) <= eta) return 0;
  return z > 0.0 ? 1 : -1;
}

double ols_slope(const std::vector<double>& ys) {
  const double count = static_cast<double>(ys.size());
  const double mean_t = (count - 1.0) / 2.0;
  double mean_y = 0.0;
  for (double y : ys) mean_y += y;
  mean_y /= count;
  double num = 0.0;
  double den = 0.0;
  for (std::size_t t = 0; t < ys.size(); ++t) {
    const double dt = static_cast<double>(t) - mean_t;
    num += dt * (ys[t] - mean_y);
    den += dt * dt;
  }
  return num / den;
}

}  // namespace

ProcessClass classify(double slope_k2, double slope_phi, double eta) {
  if (!(eta >= 0.0)) throw DomainError("classify: eta must be >= 0");
  const int sk = banded_sign(slope_k2, eta);
  const int sp = banded_sign(slope_phi, eta);
  if (sk < 0) {
    return sp < 0 ? ProcessClass::information_discarding
                  : ProcessClass::self_organizing;
  }
  if (sk > 0) {
    return sp > 0 ? ProcessClass::factic : ProcessClass::random;
  }
  return sp == 0 ? ProcessClass::reversible : ProcessClass::unclassified;
}

ProcessReport series_report(const std::vector<BitString>& xs,
                            std::optional<double> eta) {
  if (xs.size() < 3) throw TooShortError("series_report: need at least 3 strings");
  ProcessReport report;
  report.series.reserve(xs.size());
  std::vector<double> k2s;
  std::vector<double> phis;
  k2s.reserve(xs.size());
  phis.reserve(xs.size());
  for (std::size_t t = 0; t < xs.size(); ++t) {
    const FacticityReport r = estimate(xs[t]);
    report.series.push_back({t, r.k2, r.phi});
    k2s.push_back(static_cast<double>(r.k2));
    phis.push_back(static_cast<double>(r.phi));
  }
  report.slope_k2 = ols_slope(k2s);
  report.slope_phi = ols_slope(phis);
  if (eta.has_value()) {
    report.eta = *eta;
  } else {
    double mean_k2 = 0.0;
    for (double v : k2s) mean_k2 += v;
    mean_k2 /= static_cast<double>(k2s.size());
    report.eta = 0.01 * mean_k2 / static_cast<double>(xs.size());
  }
  report.label = classify(report.slope_k2, report.slope_phi, report.eta);
  return report;
}

}  // namespace facticity
