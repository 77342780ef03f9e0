#ifndef RATKNOT_ERRORS_HPP
#define RATKNOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ratknot {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (e.g. r < 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// p and q are both odd, so no even continued fraction exists.
class NoEvenExpansion : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotCoprime : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Continued fraction violates the preconditions of the requested construction.
class InvalidCF : public DomainError {
 public:
  using DomainError::DomainError;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// Enumeration would exceed the configured cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A denominator vanished under a substitution.
class SubstitutionSingularity : public DivisionByZero {
 public:
  using DivisionByZero::DivisionByZero;
};

/// Malformed textual input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ratknot

#endif  // RATKNOT_ERRORS_HPP
