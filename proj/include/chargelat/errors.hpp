#pragma once

#include <stdexcept>
#include <string>

namespace chargelat {

/// Malformed caller input: dimension mismatch, duplicate axes, bad JSON shape.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested exhaustive run is beyond what can be enumerated.
class IntractableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two linear-factor roots coincide as rationals but not as lattice classes.
class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cluster enumeration would exceed the configured work cap.
class WorkLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chargelat
