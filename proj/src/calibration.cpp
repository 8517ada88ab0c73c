#include "srs3/calibration.hpp"

#include <algorithm>
#include <cmath>

#include "srs3/pansu.hpp"
#include "srs3/rng.hpp"

namespace srs3 {

namespace {

constexpr double axis_eps = 1e-8;

void check_in_tube(const FoliationSide& f, double omega) {
  if (omega < axis_eps)
    throw OnAxis("calibration: point on the vertical axis");
  if (f.lambda > 0.0) {
    if (omega > sphere_omega_max(f.lambda) + 1e-10)
      throw OutsideTube("calibration: point outside the solid tube");
  } else {
    if (omega > 0.5 * pi - axis_eps)
      throw OnEquator("calibration: point on the equatorial circle");
  }
}

// tau-coordinate of the generating curve branch at axis distance omega.
double branch_tau(const FoliationSide& f, double omega) {
  if (f.lambda <= 0.0) return f.side == Side::plus ? 0.0 : pi;
  const double omega_max = sphere_omega_max(f.lambda);
  const double mu = generating_tau(f.lambda, std::min(omega, omega_max));
  return f.side == Side::plus ? mu : sphere_tau_span(f.lambda) - mu;
}

// Arc length along the generating geodesic at axis distance omega,
// on the requested half (plus: before the equator, minus: after).
double branch_arclength(const FoliationSide& f, double omega) {
  const double r = std::sqrt(1.0 + f.lambda * f.lambda);
  const double x = std::clamp(r * std::sin(omega), -1.0, 1.0);
  const double a = std::asin(x);
  return (f.side == Side::plus ? a : pi - a) / r;
}

}  // namespace

double leaf_parameter(const FoliationSide& f, const Point& p) {
  const Cylindrical c = cylindrical(p);
  check_in_tube(f, c.omega);
  return wrap_2pi(c.tau - branch_tau(f, c.omega));
}

ParamSurface leaf_surface(const FoliationSide& f, double t) {
  // The minus side runs the rotation angle backwards so that the canonical
  // normal of both charts is the one whose horizontal Gauss map is the
  // calibration field.
  ParamSurface S;
  const FoliationSide fc = f;
  const double sgn = f.side == Side::plus ? 1.0 : -1.0;
  S.eval = [fc, t, sgn](double omega, double theta) {
    return from_cylindrical(omega, branch_tau(fc, omega) + t, sgn * theta);
  };
  S.u0 = 0.0;
  S.u1 = sphere_omega_max(f.lambda);
  S.v0 = 0.0;
  S.v1 = 2.0 * pi;
  S.fd_step = 1e-6;
  return S;
}

TangentVector calibration_field(const FoliationSide& f, const Point& p) {
  const Cylindrical c = cylindrical(p);
  check_in_tube(f, c.omega);

  const double lambda = f.lambda;
  const double r = std::sqrt(1.0 + lambda * lambda);
  const double s = branch_arclength(f, c.omega);

  // Angle of the generating geodesic whose translate passes through p.
  const double argw = std::atan2(lambda / r * std::sin(r * s), std::cos(r * s));
  const double theta0 = c.theta - c.tau + argw;

  // Characteristic direction of the leaf: the translated geodesic velocity
  // lambda (p i - i p) + p (cos(theta0) j + sin(theta0) k).  The field is
  // minus its 90-degree rotation, i.e. the horizontal Gauss map of the leaf
  // for the normal with constant mean curvature +lambda.
  const Vec4 i(0, 1, 0, 0);
  const Vec4 dir(0, 0, std::cos(theta0), std::sin(theta0));
  const Vec4 vel = lambda * (qmul(p, i) - qmul(i, p)) + qmul(p, dir);
  Vec4 x = -qmul(i, vel);
  x -= x.dot(p) * p;  // hygiene: exactly tangent
  return TangentVector{p, x.normalized()};
}

double divergence(const VectorField& field, const Point& p, double h) {
  if (!(h >= 1e-6 && h <= 1e-3))
    throw DomainExceeded("divergence: h outside [1e-6, 1e-3]");
  const Frame fr = frame(p);
  double total = 0.0;
  for (const Vec4& e : {fr.e1, fr.e2, fr.t}) {
    double hi = h;
    for (int shrink = 0;; ++shrink) {
      try {
        const Vec4 plus = field(Point((p + hi * e).normalized())).v;
        const Vec4 minus = field(Point((p - hi * e).normalized())).v;
        total += (plus - minus).dot(e) / (2.0 * hi);
        break;
      } catch (const Error&) {
        if (shrink >= 40) throw;
        hi *= 0.5;
      }
    }
  }
  return total;
}

CampaignCollars pointwise_collars(double h, double tol) {
  CampaignCollars c;
  c.axis = 1.5 * std::cbrt(h * h / tol);
  c.wall = 1.5 * std::pow(0.05 * h * h / tol, 0.4);
  return c;
}

DivergenceStats divergence_campaign(const FoliationSide& f, int n, double h,
                                    std::uint64_t seed, double axis_collar,
                                    double wall_collar) {
  if (axis_collar < 0.0) axis_collar = 10.0 * h;
  const double omega_lo = axis_collar;
  const double omega_hi = f.lambda > 0.0
                              ? sphere_omega_max(f.lambda) - wall_collar
                              : 0.5 * pi - axis_collar;

  CounterRng rng(seed);
  const auto field = [&f](const Point& p) { return calibration_field(f, p); };

  DivergenceStats stats;
  stats.lambda = f.lambda;
  stats.side = f.side;
  stats.h = h;
  stats.samples = n;
  stats.axis_collar = axis_collar;
  stats.wall_collar = wall_collar;

  // Volume-uniform sampling: sin^2(omega) is uniform on the tube.
  const double s2lo = std::sin(omega_lo) * std::sin(omega_lo);
  const double s2hi = std::sin(omega_hi) * std::sin(omega_hi);
  double sum = 0.0, max_dev = 0.0;
  for (int k = 0; k < n; ++k) {
    const double s2 = s2lo + (s2hi - s2lo) * rng.uniform();
    const double omega = std::asin(std::sqrt(s2));
    const double tau = rng.uniform(0.0, 2.0 * pi);
    const double theta = rng.uniform(0.0, 2.0 * pi);
    const Point p = from_cylindrical(omega, tau, theta);
    const double div = divergence(field, p, h);
    sum += div;
    max_dev = std::max(max_dev, std::abs(div + 2.0 * f.lambda));
  }
  stats.mean = sum / n;
  stats.max_abs_dev = max_dev;
  return stats;
}

}  // namespace srs3
