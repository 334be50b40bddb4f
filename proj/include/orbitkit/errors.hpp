#pragma once

#include <stdexcept>
#include <string>

namespace orbitkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad poset spec, bad restriction, bad statistic
/// descriptor, inconsistent bounds.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A structural invariant failed at runtime (action left its set, a labeling
/// became invalid, a map is not bijective). Always signals a bug or a
/// falsified claim, never bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace orbitkit
