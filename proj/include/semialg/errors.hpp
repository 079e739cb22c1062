// Exception hierarchy. Every constructor that rejects its input throws a
// subclass of Error carrying a human-readable message; witnesses for the
// algebraic axiom failures are also exposed structurally so callers can
// report them without parsing the message.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semialg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DuplicateElementError : public Error {
 public:
  using Error::Error;
};

class UnknownElementError : public Error {
 public:
  using Error::Error;
};

/// Antisymmetry failure when closing a relation: two distinct elements
/// ended up below each other.
class CycleError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Base for the semigroup axiom failures; `witness()` names the elements
/// of the offending instance in evaluation order.
class AxiomError : public Error {
 public:
  AxiomError(const std::string& what, std::vector<std::string> witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::string> witness_;
};

class NotIdempotentError : public AxiomError {
 public:
  using AxiomError::AxiomError;
};

class NotCommutativeError : public AxiomError {
 public:
  using AxiomError::AxiomError;
};

class NotAssociativeError : public AxiomError {
 public:
  using AxiomError::AxiomError;
};

/// A pair of the poset has no greatest lower bound.
class NoMeetError : public Error {
 public:
  using Error::Error;
};

/// Two vectors (or a vector and an operation) live over different carriers.
class CarrierMismatchError : public Error {
 public:
  using Error::Error;
};

class NotUnitalError : public Error {
 public:
  using Error::Error;
};

class NoZeroElementError : public Error {
 public:
  using Error::Error;
};

class UnknownFamilyError : public Error {
 public:
  using Error::Error;
};

/// The exhaustive diagonal search proved that no diagonal exists.
class NoDiagonalError : public Error {
 public:
  using Error::Error;
};

/// Instance too large for the requested exhaustive search.
class OracleBoundError : public Error {
 public:
  using Error::Error;
};

/// Text input rejected; `line()` is 1-based within the parsed stream.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace semialg
