#pragma once

#include <cstdlib>
#include <string>
#include <thread>

namespace facticity {

// Worker count for parallel phases: an explicit request wins, then the
// FACTICITY_THREADS environment variable, then machine parallelism.  Always
// at least 1.  Results never depend on the resolved value; partitioned work
// merges through deterministic associative folds.
inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("FACTICITY_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed >= 1) return static_cast<unsigned>(parsed);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

}  // namespace facticity
