#pragma once

#include <stdexcept>
#include <string>

namespace forcing_lab {

/// Raised when an argument violates an operation's domain (bad vertex id,
/// family parameter out of range, theorem hypotheses not met).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the exhaustive solvers when a configured limit is exceeded.
/// Never accompanied by a partial answer.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction failed its own verification step. Indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace forcing_lab
