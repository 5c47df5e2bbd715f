#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace galign {

// Base for everything this library throws. The CLI maps subclasses onto
// exit codes: input/parameter problems -> 2, solver problems -> 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- algebra ---
struct NonUnitAxis : Error {
  using Error::Error;
};
struct NonUnitRotor : Error {
  using Error::Error;
};

// --- eigensolver ---
struct NoConvergence : Error {
  using Error::Error;
};

// --- estimator ---
struct EmptyProblem : Error {
  using Error::Error;
};
struct NonPositiveWeight : Error {
  using Error::Error;
};
struct NoPointData : Error {
  using Error::Error;
};
struct ZeroPrior : Error {
  using Error::Error;
};
struct DegeneratePrior : Error {
  using Error::Error;
};

// --- io / cli ---
struct IoError : Error {
  using Error::Error;
};
struct ParseError : Error {
  ParseError(const std::string& msg, size_t line, size_t column)
      : Error(msg), line(line), column(column) {}
  size_t line = 0;
  size_t column = 0;
};
struct InvalidParameter : Error {
  using Error::Error;
};

}  // namespace galign
