#pragma once

#include <stdexcept>
#include <string>

namespace nilorb {

/** Base class for all errors thrown by this library. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or out-of-domain input values (bad n, bad multiplicities, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Index outside a matrix, row, or label range.
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// An operation was called on data outside its stated precondition.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// congruence_signature input is not symmetric / Hermitian for its field.
class NotSelfAdjoint : public Error {
 public:
  using Error::Error;
};

/// Real form parameter validation failed (non-simple or compact cases).
class InvalidForm : public Error {
 public:
  using Error::Error;
};

/// Text or JSON input does not match the documented grammar.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A well-formed diagram that is not a member of the form's parameter set.
class NotInParamSet : public Error {
 public:
  using Error::Error;
};

/// Fiber index outside 1..fiber_size.
class BadFiberIndex : public Error {
 public:
  using Error::Error;
};

/// Gram matrices exist only for the five forms with an invariant form.
class NoFormForThisAlgebra : public Error {
 public:
  using Error::Error;
};

/// Matrix dimensions or field tags do not fit the requested operation.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace nilorb
