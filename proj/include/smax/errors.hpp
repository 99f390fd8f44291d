#pragma once

#include <stdexcept>
#include <string>

namespace smax {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user-supplied initial data or parameters.
struct InvalidInitial : Error {
  using Error::Error;
};

// Adaptive step underflowed before an endpoint event was identified.
struct StepCollapse : Error {
  using Error::Error;
};

// Picard iteration failed to contract after all interval halvings.
struct NoContraction : Error {
  using Error::Error;
};

// A sample violates the spacelike condition |Du| < 1 (or u'^2 < 1).
struct SpacelikeViolation : Error {
  using Error::Error;
};

// A sample violates u > 0.
struct PositivityViolation : Error {
  using Error::Error;
};

// Mesh vertex star too small for a curvature fit.
struct DegenerateStar : Error {
  using Error::Error;
};

// <p, a_vec> vanishes at some vertex of the residual evaluation.
struct DenominatorZero : Error {
  using Error::Error;
};

// Requested parameter range intersected with validity constraints is empty.
struct DomainEmpty : Error {
  using Error::Error;
};

// Transform arguments outside the symmetry group (non-horizontal shift, ...).
struct InvalidTransform : Error {
  using Error::Error;
};

// Measured qualitative features contradict the classification table.
struct ClassificationMismatch : Error {
  using Error::Error;
};

// Damped Newton failed to reduce the residual.
struct NewtonDiverged : Error {
  using Error::Error;
};

// Newton iterates pinned at the gradient safeguard.
struct SpacelikeBreach : Error {
  using Error::Error;
};

// An iterate lost positivity.
struct PositivityBreach : Error {
  using Error::Error;
};

// Continuation step underflowed.
struct ContinuationStalled : Error {
  using Error::Error;
};

// Radial profile never crossed the boundary-data line (numeric failure).
struct NoIntersection : Error {
  using Error::Error;
};

// CLI / run configuration problems.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace smax
