#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "mtdec/dimension.hpp"

namespace mtdec {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unknown unit symbol or malformed unit expression.
struct UnitError : Error {
  using Error::Error;
};

// Incompatible dimensions in add/subtract/convert; carries both sides.
struct DimensionError : Error {
  DimensionError(const std::string& what, Dimension l, Dimension r)
      : Error(what + ": [" + l.str() + "] vs [" + r.str() + "]"),
        lhs(std::move(l)),
        rhs(std::move(r)) {}
  Dimension lhs, rhs;
};

// Model precondition violated (nonpositive mass, zero vector, ...).
struct DomainError : Error {
  using Error::Error;
};

// A quantity diverges for the given inputs (zero ionic strength,
// mutually orthogonal orientation triple).
struct DivergenceError : Error {
  using Error::Error;
};

// Input outside a formula's regime of validity (partial separation > 2r).
struct OutOfRegimeError : Error {
  using Error::Error;
};

// Formula audit cannot proceed (unbound symbol).
struct AuditError : Error {
  using Error::Error;
};

// Text parse failure; position is a 0-based byte offset into the input.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

// Scenario / formula file fails schema validation.
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace mtdec
