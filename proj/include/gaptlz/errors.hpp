#pragma once

#include <stdexcept>
#include <string>

namespace gaptlz {

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonConvergence : NumericError {
  using NumericError::NumericError;
};

struct QuadratureNotConverged : NumericError {
  using NumericError::NumericError;
};

struct SingularMinor : NumericError {
  int order;
  explicit SingularMinor(int k)
      : NumericError("leading minor D_" + std::to_string(k) +
                     " vanishes to working precision"),
        order(k) {}
};

struct PoleError : NumericError {
  using NumericError::NumericError;
};

struct DomainError : NumericError {
  using NumericError::NumericError;
};

struct JumpPointError : DomainError {
  using DomainError::DomainError;
};

struct SymmetryViolation : DomainError {
  using DomainError::DomainError;
};

struct OutsideSupport : DomainError {
  using DomainError::DomainError;
};

struct EndpointSingular : DomainError {
  using DomainError::DomainError;
};

struct OutsideGap : DomainError {
  using DomainError::DomainError;
};

struct OutsideDisk : DomainError {
  using DomainError::DomainError;
};

struct OnContour : DomainError {
  using DomainError::DomainError;
};

struct PathCrossesCut : DomainError {
  using DomainError::DomainError;
};

struct BranchAmbiguity : NumericError {
  using NumericError::NumericError;
};

}  // namespace gaptlz
