#pragma once

#include <functional>
#include <utility>

#include "srs3/quadrature.hpp"
#include "srs3/s3.hpp"

namespace srs3 {

/// Parametric surface patch in S^3.  `du`/`dv` are optional analytic
/// partials; when absent, partials are taken by central differences of
/// `eval` with step `fd_step` and projected onto the tangent space.
struct ParamSurface {
  std::function<Point(double, double)> eval;
  std::function<Vec4(double, double)> du;
  std::function<Vec4(double, double)> dv;
  double u0 = 0.0, u1 = 1.0;
  double v0 = 0.0, v1 = 1.0;
  double fd_step = 1e-6;
};

/// 4-vector w with <w,d> = det(a,b,c,d) for all d.
Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c);

/// Tangent-plane partials at (u,v), analytic when available.
std::pair<Vec4, Vec4> partials(const ParamSurface& S, double u, double v);

/// Unit Riemannian normal, oriented so that (du, dv, N) is a positive
/// basis in the frame {E1, E2, T}.  Throws DegenerateParametrization when
/// the Jacobian drops rank.
TangentVector unit_normal(const ParamSurface& S, double u, double v);

/// Horizontal norm |N_h| of the unit normal; 0 exactly on the singular set.
/// Never throws at singular points (used by area integrands and scans).
double horizontal_norm(const ParamSurface& S, double u, double v);

struct HorizontalGauss {
  TangentVector nu_h;  // unit horizontal Gauss map
  double norm_nh;      // |N_h| in [0,1]
};

/// Horizontal Gauss map; throws SingularPoint when |N_h| < 1e-8.
HorizontalGauss horizontal_gauss(const ParamSurface& S, double u, double v);

/// Characteristic direction Z = rot90(nu_h), tangent to the surface.
TangentVector characteristic_field(const ParamSurface& S, double u, double v);

/// Sub-Riemannian area: integral of |N_h| against the Riemannian area
/// element.  The integrand stays bounded across singular loci.
QuadResult sr_area(const ParamSurface& S, const QuadratureSpec& spec = {});

/// Riemannian area of the patch (upper bound for sr_area).
QuadResult riemannian_area(const ParamSurface& S,
                           const QuadratureSpec& spec = {});

/// div_Sigma nu_h at an interior regular point, by central differences of
/// the horizontal Gauss map along two orthonormal tangent directions.
/// Equals -2H; a surface of constant mean curvature lambda returns
/// -2*lambda up to O(h) and parametrization noise.  h in [1e-6, 1e-3].
double mean_curvature_check(const ParamSurface& S, double u, double v,
                            double h);

/// Region of the (omega, tau) half-sphere given as a tau-graph over an
/// omega interval.
struct RevolutionRegion {
  double omega0 = 0.0;
  double omega1 = 0.5 * pi;
  std::function<std::pair<double, double>(double)> tau_bounds;  // (lo, hi)
};

/// Volume of the rotationally invariant solid generated by the region:
/// V = 2*pi * integral of (hi-lo)(omega) * cos(omega) sin(omega) d omega.
QuadResult volume_revolution(const RevolutionRegion& region,
                             const QuadratureSpec& spec = {});

/// Indicator-set fallback: midpoint sum on a cells x cells grid over
/// [0,pi/2] x [0,2pi).  Low accuracy; prefer the graph form.
double volume_revolution_indicator(
    const std::function<bool(double, double)>& contains, int cells);

/// The flat torus at constant distance arccos(rho) from the vertical axis,
/// parametrized by the two circle angles.
ParamSurface clifford_torus(double rho);

}  // namespace srs3
