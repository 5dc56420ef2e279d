#pragma once

#include <stdexcept>
#include <string>

namespace ebell {

// Base for every failure raised by the library. The CLI maps any of these to
// exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ket norm or density-matrix invariant violated.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

// Non-finite matrix entries or malformed numeric input.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Matrix logarithm requested for a singular matrix.
class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

// Spectrum of a supposed density matrix has a clearly negative eigenvalue.
class NotAStateError : public Error {
 public:
  using Error::Error;
};

class NumericalFailureError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidDistributionError : public Error {
 public:
  using Error::Error;
};

// Entrywise ordering requested for matrices with complex entries.
class NotComparableError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ebell
