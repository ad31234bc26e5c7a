#pragma once

#include <stdexcept>
#include <string>

namespace oalcusum {

// E[e^{theta Z}] diverges at the requested argument. boundary() is the
// supremum (or infimum, for negative arguments) of the valid domain, so
// callers that bracket roots can back away from the singularity.
class MgfDomainError : public std::domain_error {
 public:
  MgfDomainError(const std::string& what, double boundary)
      : std::domain_error(what), boundary_(boundary) {}
  double boundary() const noexcept { return boundary_; }

 private:
  double boundary_;
};

// A root-finder or fixed-point iteration failed: no sign change in the
// bracket, no crossing below the ceiling, or iteration budget exhausted.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A theorem hypothesis does not hold for the supplied inputs (for example
// a > g(mu)/u at the converged fixed point).
class ConstraintError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CalibrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EstimationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oalcusum
