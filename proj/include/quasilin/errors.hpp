#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ql {

// Base for every error thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A precondition of an operation does not hold (non-square matrix, polyhedron
// not full-dimensional, empty generator list, ...). The message names the
// failed hypothesis.
struct DomainError : Error {
  using Error::Error;
};

// Input is degenerate in a way the operation cannot quantify (e.g. a
// polyhedron that is a single point with every constraint tight).
struct DegenerateInputError : Error {
  using Error::Error;
};

// A configurable enumeration budget was exceeded; the message advises a
// larger cap.
struct BudgetError : Error {
  using Error::Error;
};

// Law detection failed on every candidate period. Carries the residual table
// of the smallest candidate so callers can print a diagnosis.
struct DetectionError : Error {
  // One row per sweep index: (n, human-readable residual).
  std::vector<std::pair<long, std::string>> residuals;

  DetectionError(const std::string& what,
                 std::vector<std::pair<long, std::string>> table)
      : Error(what), residuals(std::move(table)) {}
};

// A theorem-backed internal invariant was violated. This always indicates a
// bug or a malformed input slipping past validation, never a recoverable
// condition.
struct InvariantError : Error {
  using Error::Error;
};

// Problem-file or report parsing failure.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace ql
