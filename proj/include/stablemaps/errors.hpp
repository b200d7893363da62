#pragma once

#include <stdexcept>
#include <string>

namespace stablemaps {

// Bad parameters supplied by the caller (CLI maps these to exit code 2).
struct InvalidQuery : std::invalid_argument {
  explicit InvalidQuery(const std::string& what) : std::invalid_argument(what) {}
};

// An internal consistency check failed (non-integral count, degree mismatch,
// inexact division where exactness is guaranteed).
struct ComputationError : std::runtime_error {
  explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stablemaps
