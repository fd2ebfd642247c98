#ifndef MONIDEAL_ERROR_HPP
#define MONIDEAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mi {

/// Base class for every error raised by the library. All of them signal bad
/// input (the CLI maps them to exit code 3); internal invariant violations use
/// InternalError instead.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class NameCollision : public Error {
public:
  using Error::Error;
};

class UnknownVariable : public Error {
public:
  using Error::Error;
};

/// The operation needs a proper nonzero ideal (or a nonzero module).
class ImproperInput : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

/// A precondition on a named hypothesis failed (radical membership, ring sizes,
/// containment of modules, ...).
class HypothesisViolation : public Error {
public:
  using Error::Error;
};

/// Computation refused because it would exceed a configured resource budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// A computed object failed a check it must pass before it may be used (a
/// block ideal whose depth profile differs from its claim, for instance).
class VerificationFailure : public Error {
public:
  using Error::Error;
};

class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace mi

#endif
