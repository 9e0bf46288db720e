#pragma once

#include <stdexcept>
#include <string>

namespace padehyp {

// Root of every error raised by the library. Each subclass names one failure
// mode so callers (and the CLI exit-code mapping) can dispatch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated a documented precondition (bad parameter, bad order, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidOrder : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class InvalidParameter : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class PoleInDenominator : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

class DivergentAtPoint : public Error {
 public:
  using Error::Error;
};

class NoRatioBound : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

class ContactFailure : public Error {
 public:
  ContactFailure(const std::string& what, int index) : Error(what), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

class RegimeViolation : public Error {
 public:
  using Error::Error;
};

class UnclassifiedRegime : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class IntegrabilityViolation : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class BoundaryParameter : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class PoleOnGrid : public Error {
 public:
  using Error::Error;
};

}  // namespace padehyp
