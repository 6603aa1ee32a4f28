#pragma once

#include <stdexcept>

namespace facticity {

// Error taxonomy shared by every module.  Precondition violations raise
// DomainError; malformed bit streams raise TruncatedFrame; resource guards
// raise CapacityError or OverflowError; queries that would need information
// outside an enumerated table raise UncertifiedError.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error {
  using Error::Error;
};

struct TruncatedFrame : Error {
  using Error::Error;
};

struct CapacityError : Error {
  using Error::Error;
};

struct OverflowError : Error {
  using Error::Error;
};

struct UncertifiedError : Error {
  using Error::Error;
};

struct TooShortError : Error {
  using Error::Error;
};

}  // namespace facticity
