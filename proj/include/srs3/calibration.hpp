#pragma once

#include <cstdint>
#include <functional>

#include "srs3/s3.hpp"
#include "srs3/surfaces.hpp"

namespace srs3 {

/// One of the two vertical-translation foliations of the solid tube around
/// the axis: leaves are translates of the lower (plus) or upper (minus)
/// half of the rotational sphere of curvature lambda.  lambda = 0 foliates
/// the whole sphere minus the opposite circle.
enum class Side { plus, minus };

struct FoliationSide {
  double lambda = 0.0;
  Side side = Side::plus;
};

/// Translation parameter t in [0, 2pi) of the unique leaf through p.
/// Throws OnAxis / OutsideTube / OnEquator at the excluded loci.
double leaf_parameter(const FoliationSide& f, const Point& p);

/// The leaf at parameter t as a parametric patch (omega, theta) on
/// [0, omega_max] x [0, 2pi].  The canonical normal agrees with the
/// orientation whose horizontal Gauss map is the calibration field.
ParamSurface leaf_surface(const FoliationSide& f, double t);

/// Unit horizontal field equal to the horizontal Gauss map of the leaf
/// through each point.  Closed form; smooth away from the axis.
TangentVector calibration_field(const FoliationSide& f, const Point& p);

using VectorField = std::function<TangentVector(const Point&)>;

/// Riemannian divergence by central differences of the degree-0 radial
/// extension along the frame directions.  h in [1e-6, 1e-3].  The stencil
/// shrinks adaptively when a field evaluation leaves the field's domain;
/// the domain error propagates if shrinking cannot fix it.
double divergence(const VectorField& field, const Point& p, double h);

struct DivergenceStats {
  double lambda = 0.0;
  Side side = Side::plus;
  double h = 0.0;
  int samples = 0;
  double mean = 0.0;
  double max_abs_dev = 0.0;  // max |div + 2 lambda| over the samples
  double axis_collar = 0.0;  // excluded tube radius around the axis
  double wall_collar = 0.0;  // excluded margin inside the tube wall
};

/// Exclusion radii at which the pointwise FD error stays below tol for
/// step h, from the measured truncation laws of the field family: the
/// error grows as h^2 / (3 d^3) towards the axis (where the field winds)
/// and as 0.017 h^2 d^{-5/2} towards the wall (where the field is only
/// Hoelder-1/2, the leaves being tangent to the wall).
struct CampaignCollars {
  double axis = 0.0;
  double wall = 0.0;
};
CampaignCollars pointwise_collars(double h, double tol);

/// Divergence of the calibration field at volume-uniform random points of
/// the tube, excluding a collar around the axis, a margin inside the tube
/// wall (lambda > 0), and, for lambda = 0, the mirror collar around the
/// opposite circle.  Negative collar arguments select the measured-law
/// defaults pointwise_collars(h, 1e-4), which keep every sample's FD error
/// below 1e-4.  The sample set depends only on (seed, n, collars), so
/// campaigns at different h reuse identical points.
DivergenceStats divergence_campaign(const FoliationSide& f, int n, double h,
                                    std::uint64_t seed,
                                    double axis_collar = -1.0,
                                    double wall_collar = -1.0);

}  // namespace srs3
