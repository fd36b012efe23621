#pragma once

#include <stdexcept>
#include <string>

namespace qm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input (bad JSON, unparsable rational, missing field).
struct ParseError : Error {
  using Error::Error;
};

/// Dimension mismatch, arity mismatch, or violated precondition.
struct ShapeError : Error {
  using Error::Error;
};

/// Requested computation has no implementation for these parameters.
struct UnavailableError : Error {
  using Error::Error;
};

/// A presentation failed a structural sanity check (e.g. nonzero graded
/// pieces above the declared top degree).
struct PresentationError : UnavailableError {
  using UnavailableError::UnavailableError;
};

/// Enumeration or size budget exceeded.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace qm
