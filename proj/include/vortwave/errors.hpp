#pragma once

#include <stdexcept>
#include <string>

namespace vortwave {

/// Argument outside the mathematical domain of an operation (negative depth,
/// height below the bed, overflow region of cosh/sinh, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameter set that is valid but outside what an analysis supports, e.g.
/// left-going waves handed to the phase-portrait code.
class UnsupportedConfiguration : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Violated precondition on a caller-supplied object (non-normalized
/// coefficients, classification of a non-critical point).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A numerical procedure failed. `component` names the failing stage so the
/// CLI can report it.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(std::string component, const std::string& what)
      : std::runtime_error(component + ": " + what), component_(std::move(component)) {}

  const std::string& component() const noexcept { return component_; }

 private:
  std::string component_;
};

}  // namespace vortwave
