#pragma once

#include <stdexcept>
#include <string>

namespace pacnav {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A path history is too short for the requested computation.
struct InsufficientHistoryError : Error {
  using Error::Error;
};

/// Non-finite or otherwise malformed input value.
struct InvalidInputError : Error {
  using Error::Error;
};

/// Geometry with no defined answer (coincident points, zero net displacement).
struct DegenerateGeometryError : Error {
  using Error::Error;
};

/// A caller broke an API precondition (e.g. stepping a terminal world).
struct ContractViolationError : Error {
  using Error::Error;
};

}  // namespace pacnav
