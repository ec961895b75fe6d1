#pragma once

#include <stdexcept>
#include <string>

namespace psa {

/// Input violates a documented invariant (non-finite value, negative power, ...).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Scenario file could not be parsed; message carries line number and key.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A closed-form tangent expression hit a vanishing denominator.
class PoleDetected : public std::runtime_error {
 public:
  explicit PoleDetected(const std::string& what) : std::runtime_error(what) {}
};

/// Probe field is strong enough to deplete the pumps; extraction aborted.
class ProbeTooLarge : public std::runtime_error {
 public:
  explicit ProbeTooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive integrator exceeded its step budget.
class MaxStepsExceeded : public std::runtime_error {
 public:
  explicit MaxStepsExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Scan specification names a variable the scanner does not know.
class UnknownScanVariable : public std::runtime_error {
 public:
  explicit UnknownScanVariable(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace psa
