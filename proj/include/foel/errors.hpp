#pragma once

#include <stdexcept>
#include <string>

namespace foel {

/// Malformed input: bad graph file, inconsistent dimensions, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-convergence, ill-conditioning or an internal cross-check that did not agree.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operator was expected to commute with a symmetry and does not.
class SymmetryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A property the caller relied on (FOEL, a comparison hypothesis) does not hold.
class PropertyViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace foel
