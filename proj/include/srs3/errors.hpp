#pragma once

#include <stdexcept>

namespace srs3 {

/// Base class of every error thrown by the toolkit.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HorizontalityViolation : Error { using Error::Error; };
struct SingularPoint : Error { using Error::Error; };
struct DegenerateParametrization : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct DomainExceeded : Error { using Error::Error; };
struct VolumeOutOfRange : Error { using Error::Error; };
struct OnAxis : Error { using Error::Error; };
struct OutsideTube : Error { using Error::Error; };
struct OnEquator : Error { using Error::Error; };
struct NoSingularity : Error { using Error::Error; };
struct InfeasibleConstraint : Error { using Error::Error; };
struct HypothesisViolation : Error { using Error::Error; };

}  // namespace srs3
