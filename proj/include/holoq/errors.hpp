#pragma once

#include <stdexcept>
#include <string>

namespace holoq {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shape mismatch or an index outside the valid range.
struct DimensionError : Error {
  using Error::Error;
};

// Input failed the Hermitian check H = H†.
struct NotHermitianError : Error {
  using Error::Error;
};

// Input failed the anti-Hermitian check X = -X†.
struct NotAntiHermitianError : Error {
  using Error::Error;
};

// Input failed the unitarity check U†U = I.
struct NotUnitaryError : Error {
  using Error::Error;
};

// Columns of a candidate frame are not orthonormal, or the rank is invalid.
struct InvalidFrameError : Error {
  using Error::Error;
};

// A holonomy was requested for a control matrix whose loop does not close.
struct OpenLoopError : Error {
  OpenLoopError(const std::string& what, double penalty_value)
      : Error(what), penalty(penalty_value) {}
  double penalty;
};

// Path-ordered integration was requested with too few steps.
struct InsufficientStepsError : Error {
  using Error::Error;
};

// A loop direction is not a unit vector inside the selected eigenspace,
// or a family/cluster selection is invalid.
struct InvalidDirectionError : Error {
  using Error::Error;
};

// The winding number n = 0 names the excluded constant/open curve.
struct ZeroWindingError : Error {
  using Error::Error;
};

// An operation that needs at least one element received none.
struct EmptyInputError : Error {
  using Error::Error;
};

// A transcribed reference matrix failed one of its consistency checks.
struct FixtureMismatchError : Error {
  using Error::Error;
};

// The numerical search was started at (or too close to) W = 0.
struct DegenerateStartError : Error {
  using Error::Error;
};

// A JSON document could not be parsed or does not match the schema.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace holoq
