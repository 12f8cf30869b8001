#pragma once

#include <stdexcept>
#include <string>

namespace ginv {

// Raised when an operation needs the full element list of a group that is
// too large to materialize.
class CapExceededError : public std::runtime_error {
public:
  explicit CapExceededError(const std::string &what)
      : std::runtime_error(what) {}
};

// Raised on malformed group specs, cycle strings or data files.
class ParseError : public std::invalid_argument {
public:
  explicit ParseError(const std::string &what) : std::invalid_argument(what) {}
};

// Raised when an exact computation cannot be completed (internal
// inconsistency, missing data, unsupported shape).
class ComputeError : public std::runtime_error {
public:
  explicit ComputeError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace ginv
