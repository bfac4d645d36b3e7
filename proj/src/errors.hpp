#pragma once

#include <stdexcept>

namespace recurselab {

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An intermediate argument left the configured guard range.
struct OverflowError : EvalError {
  using EvalError::EvalError;
};

// Raised by operations that return a plain value when the budget runs out.
// (The generic evaluator reports fuel exhaustion as an outcome instead.)
struct FuelExhaustedError : EvalError {
  using EvalError::EvalError;
};

}  // namespace recurselab
