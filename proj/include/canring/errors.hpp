#pragma once

#include <stdexcept>
#include <string>

namespace canring {

/// Malformed or out-of-contract input (bad fraction string, schema violation,
/// precondition failure on a public operation).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two points of a divisor coincide in the chosen ground field.
class PointCollision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The operation has no meaning for this divisor (e.g. bounds for deg D <= 0).
class Unsupported : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A proposed generator list does not generate S_D in some degree.
class IncompleteGenerators : public InputError {
 public:
  using InputError::InputError;
};

/// An internal consistency check failed (generator set incomplete, relation
/// does not vanish, ...). Indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace canring
