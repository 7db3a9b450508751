#pragma once

#include <stdexcept>
#include <string>

namespace hgrav {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Rejected input: a precondition on user-supplied values does not hold.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// The requested problem size exceeds what the dense routine accepts.
class ResourceError : public Error {
public:
  using Error::Error;
};

/// A computation ran but could not produce a trustworthy result.
class NumericalError : public Error {
public:
  using Error::Error;
};

class ConvergenceError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// Estimated discretization error is above the accepted threshold.
class GridResolutionError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// Wavefunction support reached the edge of a periodic grid.
class DomainError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

}  // namespace hgrav
