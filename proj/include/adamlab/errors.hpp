#pragma once

#include <stdexcept>
#include <string>

namespace adamlab {

/// Base class for every error raised by the library. The C API maps each
/// subclass onto a distinct status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad config, wrong schedule family, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an evaluator (e.g. k = 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Index past the end of a finite sequence.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A step would divide by an exactly-zero sqrt(v + eps) component.
class DivisionHazardError : public Error {
 public:
  using Error::Error;
};

/// Operation requested on an object that lacks the needed state.
class StateError : public Error {
 public:
  using Error::Error;
};

/// Grid certification of problem constants did not converge.
class CertificationError : public Error {
 public:
  using Error::Error;
};

/// Unknown identifier (problem id, statistic name, ...).
class LookupError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace adamlab
