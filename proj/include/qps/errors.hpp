#pragma once

#include <stdexcept>
#include <string>

namespace qps {

// Precondition or malformed-input failure. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// File, parse, or serialization failure. The CLI maps it to exit code 1.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical condition that makes the requested result meaningless
// (ill-conditioned frame operator, grid too small for decay, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qps
