#pragma once

#include <stdexcept>
#include <string>

namespace evarlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed diagram/polynomial/plan input.
struct ParseError : Error {
  using Error::Error;
};

// Operands live in different ambient rings.
struct RingMismatch : Error {
  using Error::Error;
};

// A Groebner run exceeded its pair/degree/wall-clock budget.
struct TimeoutError : Error {
  std::string stage;
  TimeoutError(std::string stage_, const std::string& what)
      : Error(what), stage(std::move(stage_)) {}
};

// An internal consistency guarantee failed (e.g. a surgery-slice period
// dividing its own slope).  Should never fire on valid inputs.
struct ContractViolation : Error {
  using Error::Error;
};

}  // namespace evarlab
