#ifndef LAURICELLA_ERRORS_HPP
#define LAURICELLA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lauricella {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands with incompatible dimensions.
class DimensionError : public Error {
public:
  using Error::Error;
};

// A matrix is singular to working precision, or its condition estimate
// exceeds the configured ceiling.  For parameter matrices this signals an
// invalid draw (spectrum too close to an excluded integer).
class SingularityError : public Error {
public:
  using Error::Error;
};

// An identity was evaluated on inputs that violate its stated
// preconditions (a commutativity pair, or a shifted-invertibility
// requirement).  The message names the offending pair or matrix.
class HypothesisError : public Error {
public:
  using Error::Error;
};

// Evaluation point lies outside the convergence guard region.
class GuardError : public Error {
public:
  using Error::Error;
};

// Malformed user input (JSON files, CLI tokens).
class InputError : public Error {
public:
  using Error::Error;
};

} // namespace lauricella

#endif
