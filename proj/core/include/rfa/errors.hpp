#pragma once

#include <stdexcept>
#include <string>

namespace rfa {

/// Base class of every exception the library throws. Messages name the
/// violated condition in terms of the caller's arguments.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An argument failed a documented precondition (bad sizes, bad ranges, ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// The scale parameters sit exactly on the critical line |a| = |b|^{1/p},
/// where the equation has no unique solution to offer.
class ResonanceError : public Error {
public:
  using Error::Error;
};

/// The selected series branch does not converge for these parameters
/// (ratio >= 1), so no solution can be produced on this route.
class RegimeError : public Error {
public:
  using Error::Error;
};

/// A series or iteration cannot reach the requested tolerance.
class DivergenceError : public Error {
public:
  using Error::Error;
};

/// A function evaluation produced a non-finite value, or a value was
/// requested where none is defined.
class EvaluationError : public Error {
public:
  using Error::Error;
};

/// Least-squares fit asked for with degenerate data (all abscissae equal).
class DegenerateFitError : public Error {
public:
  using Error::Error;
};

/// An input function violates a stated contract (periodicity, boundary
/// values); the message names the failed condition and where it failed.
class ContractViolation : public Error {
public:
  using Error::Error;
};

/// A capability was requested that the given object cannot provide
/// (e.g. exact one-sided limits of an opaque callable).
class UnsupportedFunction : public Error {
public:
  using Error::Error;
};

/// Malformed external input: files, CSV rows, command-line specs.
class InputError : public Error {
public:
  using Error::Error;
};

}  // namespace rfa
