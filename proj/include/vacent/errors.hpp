#pragma once

#include <stdexcept>
#include <string>

namespace vacent {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The two atoms of a pair do not share one transition frequency.
class FrequencyMismatchError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Evaluation requested exactly on a simple pole (e.g. resonant polarizability).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A numerical procedure failed to reach its tolerance. Carries the best
/// estimate obtained so far.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double partial, double abs_err)
      : std::runtime_error(what), partial_(partial), abs_err_(abs_err) {}

  double partial() const noexcept { return partial_; }
  double abs_err() const noexcept { return abs_err_; }

 private:
  double partial_;
  double abs_err_;
};

}  // namespace vacent
