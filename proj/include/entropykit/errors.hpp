#pragma once

#include <stdexcept>
#include <string>

namespace entropykit {

/// An argument lies outside the domain of the requested operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation could not produce a finite, certified result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The truncation scan ran past the configured hard cap on terms.
class TruncationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace entropykit

namespace entropykit {

/// An output file could not be written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace entropykit
