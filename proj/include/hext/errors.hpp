#ifndef HEXT_ERRORS_HPP
#define HEXT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hext {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad input: unparsable text, documents that do not resolve to valid
// structures, violated preconditions on user-supplied data.
struct UserError : Error {
  using Error::Error;
};

// A resource guard fired (order caps, dimension caps, memory budgets).
struct CapError : Error {
  using Error::Error;
};

// Two routes that must agree disagreed.  Always an implementation bug or
// a broken input structure, never a normal outcome.
struct ConsistencyError : Error {
  using Error::Error;
};

struct ClosureCapExceeded : CapError {
  using CapError::CapError;
};
struct CapExceeded : CapError {
  using CapError::CapError;
};
struct DimCapExceeded : CapError {
  using CapError::CapError;
};
struct BudgetExceeded : CapError {
  using CapError::CapError;
};
struct OverflowDetected : CapError {
  using CapError::CapError;
};

struct ParentMismatch : UserError {
  using UserError::UserError;
};
struct NotPermutable : UserError {
  using UserError::UserError;
};
struct NotNormal : UserError {
  using UserError::UserError;
};
struct CompositionMismatch : UserError {
  using UserError::UserError;
};
struct NonCommutingSquare : UserError {
  using UserError::UserError;
};
struct IndexOutOfRange : UserError {
  using UserError::UserError;
};
struct ShapeMismatch : UserError {
  using UserError::UserError;
};
struct NotAnExtension : UserError {
  using UserError::UserError;
};
struct ValidationError : UserError {
  using UserError::UserError;
};

struct ParseError : UserError {
  int line;
  int column;
  std::string expected;
  ParseError(int line_, int column_, const std::string& expected_)
      : UserError("parse error at " + std::to_string(line_) + ":" +
                  std::to_string(column_) + ": expected " + expected_),
        line(line_),
        column(column_),
        expected(expected_) {}
};

struct AgreementFailure : ConsistencyError {
  using ConsistencyError::ConsistencyError;
};

}  // namespace hext

#endif
