#pragma once

#include <stdexcept>
#include <string>

namespace gwalk {

/// Inversion of the zero element of a field.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operands live in different cyclotomic fields Q(zeta_n), Q(zeta_m).
class IncompatibleField : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A caller broke a documented precondition (non-normal subgroup, bad n, ...).
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Group closure exceeded the configured element ceiling.
class ClosureLimitExceeded : public std::runtime_error {
 public:
  ClosureLimitExceeded(std::size_t ceiling, const std::string& what)
      : std::runtime_error(what), ceiling_(ceiling) {}
  std::size_t ceiling() const noexcept { return ceiling_; }

 private:
  std::size_t ceiling_;
};

/// A computed structure disagrees with the claimed theorem.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gwalk
