#pragma once

#include "srs3/quadrature.hpp"
#include "srs3/s3.hpp"
#include "srs3/surfaces.hpp"

namespace srs3 {

/// Arc length at which every curvature-lambda geodesic from the south pole
/// reaches the axis again (the north pole).
inline double sphere_s_max(double lambda) {
  return pi / std::sqrt(1.0 + lambda * lambda);
}

/// Total tau-extent of the rotational sphere: pi (1 - lambda/sqrt(1+lambda^2)).
inline double sphere_tau_span(double lambda) {
  return pi * (1.0 - lambda / std::sqrt(1.0 + lambda * lambda));
}

/// Axis distance of the equatorial circle: arctan(1/lambda), pi/2 at 0.
inline double sphere_omega_max(double lambda) {
  return lambda > 0.0 ? std::atan(1.0 / lambda) : 0.5 * pi;
}

/// Geodesic of curvature lambda from the south pole (1,0,0,0) with initial
/// velocity cos(theta) E1 + sin(theta) E2; unit speed and horizontal.
Point geodesic(double lambda, double theta, double s);

/// Analytic velocity of the geodesic above.
Vec4 geodesic_velocity(double lambda, double theta, double s);

/// North pole of the sphere of curvature lambda (theta-independent).
Point north_pole(double lambda);

/// The rotational constant-mean-curvature sphere as a parametric patch
/// F(theta, s) on [0,2pi] x [0,s_max], with analytic partials.  The
/// canonical normal points out of the enclosed ball.
ParamSurface sphere_surface(double lambda);

/// tau-distance from the generating curve to the mid-latitude tau_span/2:
/// arccos(lambda tan w) - lambda/sqrt(1+lambda^2) arccos(sqrt(1+lambda^2) sin w).
/// Decreasing from tau_span/2 to 0 on [0, omega_max].  Requires lambda > 0.
double tau_gap(double lambda, double omega);

/// tau-coordinate of the lower generating-curve branch at axis distance
/// omega: tau_span/2 - tau_gap.  Increasing, 0 at omega = 0.
double generating_tau(double lambda, double omega);

/// Sub-Riemannian area of the sphere of curvature lambda.
QuadResult sphere_area(double lambda, const QuadratureSpec& spec = {});

/// Volume of the closed ball enclosed by the sphere (the profile m), via
/// the volume of revolution between the two generating-curve branches.
/// Requires lambda > 0; the default spec refines deeper than the global
/// default because the integrand has a square-root endpoint.
QuadResult ball_volume(double lambda,
                       const QuadratureSpec& spec = {.points = 64,
                                                     .panels = 2,
                                                     .max_levels = 9,
                                                     .tol = 1e-10});

/// Inverse of the volume profile: the curvature mu with ball volume V.
/// V must lie in (0, pi^2); bisection backed by a precomputed decreasing
/// profile table.  The result reproduces V within 1e-8.
double mu_for_volume(double V);

/// Membership test for the closed ball bounded by the sphere.
bool ball_contains(double lambda, const Point& p);

/// Derived constants and cached area/volume of one sphere.
struct SphereSpec {
  double lambda = 0.0;
  double s_max = pi;
  double tau_span = pi;
  double omega_max = 0.5 * pi;
  double area = 0.0;
  double area_error = 0.0;
  double volume = 0.0;  // pi^2 at lambda = 0 (limit value)
  double volume_error = 0.0;
};

SphereSpec make_sphere_spec(double lambda, const QuadratureSpec& spec = {});

}  // namespace srs3
