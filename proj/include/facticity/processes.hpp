#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "facticity/bitcodec.hpp"

namespace facticity {

// Five process classes keyed off the joint signs of complexity growth and
// model growth over time, plus a bucket for the sign pairs the scheme does
// not name.
enum class ProcessClass {
  information_discarding,  // (-, -)
  self_organizing,         // (-, 0) or (-, +)
  reversible,              // (0, 0)
  random,                  // (+, -) or (+, 0)
  factic,                  // (+, +)
  unclassified,            // (0, +) or (0, -)
};

std::string_view to_string(ProcessClass c);

struct ProcessPoint {
  std::size_t t = 0;
  std::uint64_t k2_hat = 0;
  std::uint64_t phi_hat = 0;
};

struct ProcessReport {
  std::vector<ProcessPoint> series;
  double slope_k2 = 0.0;   // bits per step, ordinary least squares
  double slope_phi = 0.0;  // bits per step
  double eta = 0.0;        // dead-band: |slope| <= eta reads as zero
  ProcessClass label = ProcessClass::unclassified;
};

// Pure sign-pair mapping with dead-band eta (slopes within eta of zero
// count as flat).  Scale-free: scaling both slopes and eta by the same
// positive factor never changes the class.
ProcessClass classify(double slope_k2, double slope_phi, double eta);

// Estimates each x_t, fits OLS slopes of k2 and phi over t, classifies.
// When eta is not given it defaults to 0.01 * mean(k2) / |xs|.
ProcessReport series_report(const std::vector<BitString>& xs,
                            std::optional<double> eta = std::nullopt);

}  // namespace facticity
