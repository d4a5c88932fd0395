#pragma once

#include <stdexcept>
#include <string>

namespace hsp {

/// Parameter outside an operation's domain (k >= n, delta >= 1/2, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element/group shape mismatch or malformed group data.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size guard was exceeded (enumeration too large, index too large for labels).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hsp
