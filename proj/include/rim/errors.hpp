#pragma once

#include <stdexcept>
#include <string>

namespace rim {

/// Malformed or out-of-contract input (CLI exit code 1).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request the library declines to run, e.g. an enumeration above its cap
/// (CLI exit code 2).
class RefusedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (CLI exit code 3).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rim
