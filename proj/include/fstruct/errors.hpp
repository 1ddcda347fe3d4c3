#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fstruct {

/// Syntax or semantic error in the expression DSL. `position()` is a byte
/// offset into the source text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Division by an identically zero rational function.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by the zero rational function") {}
};

/// Operands live on charts (or matrices) of different dimension.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is not an F-structure: wrong K, zero tensor, or the structure
/// equation has a nonzero residual.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two criteria that must agree as a matter of theory disagreed. Always an
/// implementation bug; never a property of the input.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fstruct
