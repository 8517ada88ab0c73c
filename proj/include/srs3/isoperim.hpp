#pragma once

#include <Eigen/Core>

#include <functional>
#include <string>
#include <vector>

#include "srs3/pansu.hpp"
#include "srs3/quadrature.hpp"
#include "srs3/surfaces.hpp"

namespace srs3 {

/// Smooth arc of a generating curve in the (omega, tau) half-sphere
/// coordinates, parametrized over u in [0,1].  dgamma is optional.
struct CurvePiece {
  std::function<Eigen::Vector2d(double)> gamma;
  std::function<Eigen::Vector2d(double)> dgamma;
};

/// Rotationally invariant trial set inside the solid tube of parameter
/// lambda_tube.  The pieces concatenate to the generating boundary curve,
/// oriented with the region on its left (the axis segment closing the
/// curve carries no volume or area).
struct TrialSet {
  std::string id;
  std::vector<CurvePiece> pieces;
  double lambda_tube = 1.0;
};

/// The enclosed ball of the sphere of curvature lambda, bounded by the
/// geodesic generating curve (smooth parametrization, pole to pole).
TrialSet trial_pansu_ball(double lambda);

/// Truncated tube omega <= omega_max, |tau - tau_span/2| <= half_width.
TrialSet trial_truncated_tube(double lambda, double half_width);

/// Oval region tangent to the tube wall at the equatorial latitude:
/// omega = omega_max sin(pi u)^shape, tau = tau_span/2 - c cos(pi u)
/// (1 + skew sin(pi u)).  |skew| < 1.
TrialSet trial_bump(double lambda, double c, double skew = 0.0,
                    int shape = 1);

/// Deliberately violates the equatorial-disk condition (reaches only a
/// fraction of the tube radius at the equatorial latitude).
TrialSet trial_bad_disk(double lambda);

/// Checks containment in the tube and that the region meets the
/// equatorial latitude exactly in the full disk section.  Throws
/// HypothesisViolation with a reason.
void check_hypotheses(const TrialSet& set);

/// Volume by the line integral 2 pi * closed-integral of sin^2(omega)/2 dtau.
QuadResult trial_volume(const TrialSet& set, const QuadratureSpec& spec = {});

/// Sub-Riemannian boundary area: sum of sr_area over the rotated pieces.
QuadResult trial_boundary_area(const TrialSet& set,
                               const QuadratureSpec& spec = {});

/// Comparison function xi(alpha) = A(alpha) + 2 alpha (V - m(alpha)),
/// strictly convex with minimum where m(alpha) = V.  Evaluated with a
/// locked (non-adaptive) rule so that finite differences in alpha see a
/// smooth function.
double penalized_area(double alpha, double V);
double penalized_area_d1(double alpha, double V, double dalpha = 1e-4);
double penalized_area_d2(double alpha, double V, double dalpha = 1e-4);

/// Area of the tube wall (Clifford torus at rho = cos(omega_max)); the
/// vertical field is tangent there, so the sub-Riemannian and Riemannian
/// areas coincide.
QuadResult tube_boundary_area(double lambda, const QuadratureSpec& spec = {});

struct CompareReport {
  std::string id;
  double lambda_tube = 0.0;
  double volume = 0.0;
  double volume_error = 0.0;
  double effective_volume = 0.0;  // min(V, total - V) when V exceeds half
  double area = 0.0;
  double area_error = 0.0;
  double mu = 0.0;                // curvature with matching ball volume
  double sphere_area_mu = 0.0;
  double sphere_area_mu_error = 0.0;
  double slack = 0.0;             // area - sphere_area_mu
  double penalized_slack = 0.0;   // lhs - rhs of the tube comparison
};

/// Runs the area comparison for one trial set.  Throws
/// HypothesisViolation if the tube/disk conditions fail.
CompareReport compare(const TrialSet& set, const QuadratureSpec& spec = {});

}  // namespace srs3
