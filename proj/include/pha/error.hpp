#pragma once

#include <stdexcept>
#include <string>

namespace pha {

// Failure of a well-posed computation: poles hit, singular Wronskians,
// diverging trajectories.  The CLI maps these to exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad literals, size mismatches, out-of-range indices.
// The CLI maps these to exit code 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : ValidationError {
  using ValidationError::ValidationError;
};

// Evaluation at a point where a denominator vanishes.
struct PoleError : Error {
  using Error::Error;
};

// A transformation whose defining denominator is identically zero.
struct VanishingDenominator : Error {
  using Error::Error;
};

// Wronskian of a seed family vanishes where it is needed.
struct SingularWronskian : Error {
  using Error::Error;
};

// Trajectory left the trust region during integration.
struct Blowup : Error {
  Blowup(const std::string& msg, double last_good_x)
      : Error(msg), last_x(last_good_x) {}
  double last_x;
};

}  // namespace pha
