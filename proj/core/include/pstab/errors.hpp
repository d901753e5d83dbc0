#pragma once
#include <stdexcept>
#include <string>

namespace pstab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Desk-scale limit reached; the input itself may be fine.
struct CapExceeded : Error {
  using Error::Error;
};
struct OrderCapExceeded : CapExceeded {
  using CapExceeded::CapExceeded;
};
struct DegreeCapExceeded : CapExceeded {
  using CapExceeded::CapExceeded;
};

struct BadParameters : Error {
  using Error::Error;
};

// Carries a location such as "generators[2]" or "line 3, column 7".
struct ParseError : BadParameters {
  ParseError(std::string where, const std::string& what)
      : BadParameters(where + ": " + what), location(std::move(where)) {}
  std::string location;
};

struct NotNormal : BadParameters {
  using BadParameters::BadParameters;
};
struct NotNormalized : BadParameters {
  using BadParameters::BadParameters;
};
struct NotFullyNormalized : BadParameters {
  using BadParameters::BadParameters;
};
struct NotCentric : BadParameters {
  using BadParameters::BadParameters;
};
struct NotNormalInF : BadParameters {
  using BadParameters::BadParameters;
};
struct MismatchedSylow : BadParameters {
  using BadParameters::BadParameters;
};

}  // namespace pstab
