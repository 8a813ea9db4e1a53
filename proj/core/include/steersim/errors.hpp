#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace steersim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not fit together (or exceed the supported 8x8).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Caller violated an operation precondition that is not a parameter range,
// e.g. a non-Hermitian observable or a selective channel passed to apply_tp.
class ContractError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

// A physical parameter is outside its domain. parameter() names it so the
// CLI can point at the offending flag.
class DomainError : public Error {
 public:
  DomainError(std::string parameter, const std::string& what)
      : Error(parameter + ": " + what), parameter_(std::move(parameter)) {}

  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::string parameter_;
};

// Post-selection with vanishing success probability.
class ZeroProbabilityError : public Error {
 public:
  using Error::Error;
};

class DensityError : public Error {
 public:
  enum class Kind { hermiticity, trace, positivity };

  DensityError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace steersim
