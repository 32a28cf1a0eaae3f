#pragma once

#include <stdexcept>
#include <string>

namespace cyclav {

// Precondition or input-shape violation. The CLI maps this to exit code 2.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computed result contradicts an independent check (oracle mismatch,
// closed form disagreement, family member failing the criterion).
// The CLI maps this to exit code 1.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cyclav
