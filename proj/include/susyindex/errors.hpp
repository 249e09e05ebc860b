#pragma once

#include <stdexcept>
#include <string>

namespace susyindex {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Two polynomials were combined over different generator lists or truncations.
class BasisMismatch : public Error {
 public:
  using Error::Error;
};

/// Input to symmetric reduction is not invariant under a root transposition.
class NonSymmetric : public Error {
 public:
  NonSymmetric(std::size_t i, std::size_t j, const std::string& a, const std::string& b)
      : Error("polynomial is not symmetric under transposition (" + a + " " + b + ")"),
        first(i), second(j) {}
  std::size_t first;
  std::size_t second;
};

/// An operator has an exactly vanishing eigenvalue that was not excluded.
class SingularOperator : public Error {
 public:
  SingularOperator(const std::string& what, long long mode)
      : Error(what + " (vanishing mode n=" + std::to_string(mode) + ")"), mode_index(mode) {}
  long long mode_index;
};

/// A descriptor failed validation; `field` names the offending entry.
class DescriptorError : public Error {
 public:
  DescriptorError(std::string field_name, std::string detail)
      : Error(field_name.empty() ? detail : field_name + ": " + detail),
        field(std::move(field_name)),
        message(std::move(detail)) {}
  std::string field;
  std::string message;
};

/// An index evaluated to a non-integer: the descriptor is inconsistent.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace susyindex
