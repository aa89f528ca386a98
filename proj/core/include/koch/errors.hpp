#pragma once

#include <stdexcept>
#include <string>

namespace koch {

// Base of every error raised by the library. The CLI maps the three families
// below onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition or input-domain violation (exit code 2).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A mathematical identity that must hold did not (exit code 3). Seeing one
/// means either a construction bug or a falsified claim.
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap was exceeded (exit code 4).
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A ray runs along a side instead of crossing it.
class DegenerateRay : public DomainError {
 public:
  using DomainError::DomainError;
};

/// No compatible initial condition exists at the requested level.
class NoCompatible : public DomainError {
 public:
  NoCompatible(int level, const std::string& why)
      : DomainError("no compatible initial condition at level " +
                    std::to_string(level) + ": " + why),
        level_(level) {}
  int level() const { return level_; }

 private:
  int level_;
};

/// A folded segment passes through a vertex of the scale-n lattice.
class VertexCollision : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A compatible sequence contains no Cantor-point basepoint to build a path from.
class NoCantorBasepoints : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace koch
