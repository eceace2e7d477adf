#pragma once

#include <stdexcept>
#include <string>

namespace moduli {

// Arguments outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// |d| != 3g + n - 3 for a correlator key.
class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedArgument : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed serialized input (cache files, rational literals).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant of a computation pipeline was broken.
class PipelineError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A numerical method could not reach its requested accuracy.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace moduli
