#pragma once

#include <stdexcept>
#include <string>

namespace ptchain {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operation requested in the wrong symmetry phase.
class PhaseError : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// Real-root count is neither N nor N-2 after spurious-root filtering.
class RootCountMismatch : public Error {
 public:
  using Error::Error;
};

/// Bethe amplitude vanishes identically (spurious root).
class NullState : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class GaugeError : public Error {
 public:
  using Error::Error;
};

class DegeneracyError : public Error {
 public:
  using Error::Error;
};

class StructureError : public Error {
 public:
  using Error::Error;
};

class SingularSolve : public Error {
 public:
  using Error::Error;
};

}  // namespace ptchain
