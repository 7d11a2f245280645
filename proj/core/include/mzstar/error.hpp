#pragma once

#include <stdexcept>
#include <string>

namespace mzstar {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain (sampling domain, key invariants, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Argument too close to a pole of Γ, ψ, cot or a vanishing denominator.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A stated hypothesis of a transformation or summation formula does not hold.
class HypothesisError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An adaptive summation could not reach its target within the term cap.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double achieved_error)
      : Error(what), achieved_error_(achieved_error) {}
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

/// Exact series division left a residual term.
class NonDivisibleError : public Error {
 public:
  using Error::Error;
};

/// Operation on values over incompatible coefficient rings or variable sets.
class RingMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace mzstar
