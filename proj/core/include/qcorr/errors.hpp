#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter or matrix argument is outside the documented domain.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A matrix handed in as a density matrix is not Hermitian, not unit trace,
/// or not positive semidefinite.
class InvalidState : public Error {
 public:
  using Error::Error;
};

/// Eigenvalue below the negative clamping window of a PSD-only routine.
class NotPositiveSemidefinite : public InvalidState {
 public:
  using InvalidState::InvalidState;
};

/// Two independent evaluation paths disagree, or a computed state fails its
/// own validation. Indicates a bug rather than bad input.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace qcorr
