#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simulroots {

enum class ErrorKind {
  distinctness_violation,
  singular_denominator,
  shifted_collision,
  domain_error,
  negative_denominator,
  inapplicable,
  bracket_failure,
  certificate_not_satisfied,
  certificate_degenerate,
  degenerate_bound,
  oracle_failure,
  matching_ambiguous,
  insufficient_data,
  parse_error,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every exception thrown by the library. `kind()` is stable and is
/// what the CLI maps onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DistinctnessViolation : public Error {
 public:
  DistinctnessViolation(std::size_t i, std::size_t j, double distance);
  std::size_t first() const noexcept { return i_; }
  std::size_t second() const noexcept { return j_; }

 private:
  std::size_t i_, j_;
};

class SingularDenominator : public Error {
 public:
  explicit SingularDenominator(std::size_t component);
  std::size_t component() const noexcept { return component_; }

 private:
  std::size_t component_;
};

class ShiftedCollision : public Error {
 public:
  ShiftedCollision(std::size_t i, std::size_t j);
  std::size_t first() const noexcept { return i_; }
  std::size_t second() const noexcept { return j_; }

 private:
  std::size_t i_, j_;
};

inline Error domain_error(const std::string& what) {
  return Error(ErrorKind::domain_error, what);
}

}  // namespace simulroots
