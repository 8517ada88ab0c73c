#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "srs3/quadrature.hpp"
#include "srs3/s3.hpp"
#include "srs3/spline.hpp"
#include "srs3/surfaces.hpp"

namespace srs3 {

/// Direction profile sigma of a surface ruled by horizontal great circles
/// leaving the equatorial circle: sigma(eps) = winding * eps + psi(eps)
/// with psi a C^2 periodic cubic spline on uniform knots.  The winding is
/// kept explicit so that sigma carries its total turn, not just a value
/// mod 2pi.
class AngleFunction {
 public:
  static AngleFunction identity(int n = 64);            // sigma = eps
  static AngleFunction constant_slope(double c, int n = 64);
  /// sigma = eps + amplitude * sin(mode * eps), winding 1.
  static AngleFunction sinusoidal(double amplitude, int mode, int n = 64);
  static AngleFunction from_sigma_samples(const std::vector<double>& sigma,
                                          double winding);
  /// Builds sigma(0) = 0 by integrating the spline through slope samples;
  /// the winding becomes the sample mean.
  static AngleFunction from_slope_samples(const std::vector<double>& slope);

  double sigma(double eps) const { return winding_ * eps + psi_(eps); }
  double slope(double eps) const { return winding_ + psi_.deriv(eps); }
  double winding() const { return winding_; }
  /// True when the winding is an integer, i.e. the ruled surface closes.
  bool closed(double tol = 1e-10) const;
  int knots() const { return psi_.size(); }

 private:
  AngleFunction(double winding, PeriodicCubicSpline psi)
      : winding_(winding), psi_(std::move(psi)) {}
  double winding_;
  PeriodicCubicSpline psi_;
};

/// Base circle point (0, 0, cos eps, sin eps).
Point circle_base(double eps);

/// Unit horizontal starting direction at angle sigma(eps) in the frame.
Vec4 ruled_direction(const AngleFunction& a, double eps);

/// Great-circle point cos(s) Gamma(eps) + sin(s) U(eps); hits the vertical
/// axis exactly at s = pi/2 and returns to the base circle at s = pi.
Point ruled_point(const AngleFunction& a, double eps, double s);

Vec4 ruled_velocity(const AngleFunction& a, double eps, double s);

/// Coefficient v_eps(s) = (slope-2)/2 (1 - cos 2s) + 1 governing the area
/// element and the singular loci of the ruled chart.
double v_profile(const AngleFunction& a, double eps, double s);
double v_profile_ds(const AngleFunction& a, double eps, double s);

/// Riemannian area element sqrt(4 v^2 + v'^2) / 2 of the ruled chart.
double area_element(const AngleFunction& a, double eps, double s);

/// The s-parameter of the singular locus, 0.5 arccos(slope/(slope-2)),
/// defined only when slope(eps) < 1 (NoSingularity otherwise).  The
/// horizontal norm vanishes exactly at s and pi - s.
double singular_arc_param(const AngleFunction& a, double eps);

/// Unit normal (-2 v J(gamma') + v' T) / sqrt(4 v^2 + v'^2); equals -T on
/// the singular locus.  DegenerateParametrization where v = v' = 0.
TangentVector ruled_normal(const AngleFunction& a, double eps, double s);

/// |N_h| = 2|v| / sqrt(4 v^2 + v'^2).
double ruled_horizontal_norm(const AngleFunction& a, double eps, double s);

/// The ruled chart as a generic parametric surface on [0,2pi] x [s0,s1].
ParamSurface ruled_surface(const AngleFunction& a, double s0 = 0.0,
                           double s1 = pi);

/// Sub-Riemannian area of the ruled surface over [0,2pi] x [s0,s1].  The
/// product |N_h| |Jac F| collapses to |v|, and the s-integral of |v| is
/// evaluated in closed form (splitting at the sign changes), so only the
/// eps-integral is numeric.
QuadResult plateau_area(const AngleFunction& a, double s0, double s1,
                        const QuadratureSpec& spec = {});

struct MinimizeOptions {
  double step = 0.1;
  int max_iter = 100000;
  double area_tol = 1e-8;    // stop when the area decrease stalls below this
  std::uint64_t seed = 1;    // random feasible start when none is given
  std::optional<std::vector<double>> start;  // slope samples, mean-projected
};

struct MinimizeResult {
  AngleFunction sigma;
  double area = 0.0;       // plateau_area over [0,2pi] x [0,pi/2]
  int iterations = 0;
  std::vector<double> trace;  // objective after each iteration
};

/// Minimizes the area of the half-range ruled surface over profiles with
/// the given integer winding k >= 1, by projected gradient descent on the
/// slope samples with the mean pinned at k.  The minimum is k pi^2 / 2,
/// attained exactly when the slope stays >= 1; for k = 1 the minimizer is
/// the unit slope.
MinimizeResult minimize_sigma(int winding, int n,
                              const MinimizeOptions& opts = {});

}  // namespace srs3
