#pragma once

#include <stdexcept>
#include <string>

namespace rtk {

/// Malformed or out-of-domain input (CLI exit code 4).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive search would exceed its configured cap (CLI exit code 3).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Never expected to fire.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised by the classic Radon routine when the indexed points are affinely
/// independent, so no two-part split has intersecting hulls.
class NoRadonPartition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rtk
