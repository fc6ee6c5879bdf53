#pragma once

#include <stdexcept>
#include <string>

namespace bhspin {

/// Malformed request: bad range, unknown output name, unparsable config.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside the model's domain: singular couplings, T <= 0, overflow.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The ground-state label never changes inside the scanned tau range.
class NoCrossingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bhspin
