#include "srs3/pansu.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace srs3 {

namespace {

double clamp1(double x) { return std::clamp(x, -1.0, 1.0); }

}  // namespace

Point geodesic(double lambda, double theta, double s) {
  const double r = std::sqrt(1.0 + lambda * lambda);
  const double cr = std::cos(r * s), sr = std::sin(r * s);
  const double cl = std::cos(lambda * s), sl = std::sin(lambda * s);
  const double q = lambda / r;
  Point p(cl * cr + q * sl * sr, -sl * cr + q * cl * sr,
          sr / r * std::cos(theta - lambda * s),
          sr / r * std::sin(theta - lambda * s));
  return p.normalized();
}

Vec4 geodesic_velocity(double lambda, double theta, double s) {
  const Point p = geodesic(lambda, theta, s);
  const Vec4 i(0, 1, 0, 0);
  const Vec4 dir(0, 0, std::cos(theta), std::sin(theta));
  return lambda * (qmul(p, i) - qmul(i, p)) + qmul(p, dir);
}

Point north_pole(double lambda) { return geodesic(lambda, 0.0, sphere_s_max(lambda)); }

ParamSurface sphere_surface(double lambda) {
  // The chart runs the rotation angle backwards so that the canonical
  // (frame-determinant-positive) normal is the one of constant mean
  // curvature +lambda: div_Sigma nu_h = -2 lambda.
  ParamSurface S;
  S.eval = [lambda](double theta, double s) {
    return geodesic(lambda, -theta, s);
  };
  S.du = [lambda](double theta, double s) {
    const Point p = geodesic(lambda, -theta, s);
    return Vec4(0.0, 0.0, p[3], -p[2]);  // d/dtheta rotates z2 backwards
  };
  S.dv = [lambda](double theta, double s) {
    return geodesic_velocity(lambda, -theta, s);
  };
  S.u0 = 0.0;
  S.u1 = 2.0 * pi;
  S.v0 = 0.0;
  S.v1 = sphere_s_max(lambda);
  return S;
}

double tau_gap(double lambda, double omega) {
  if (lambda <= 0.0) throw DomainExceeded("tau_gap: lambda must be positive");
  const double omega_max = sphere_omega_max(lambda);
  if (omega < -1e-12 || omega > omega_max + 1e-12)
    throw DomainExceeded("tau_gap: omega outside [0, arctan(1/lambda)]");
  omega = std::clamp(omega, 0.0, omega_max);
  const double r = std::sqrt(1.0 + lambda * lambda);
  return std::acos(clamp1(lambda * std::tan(omega))) -
         lambda / r * std::acos(clamp1(r * std::sin(omega)));
}

double generating_tau(double lambda, double omega) {
  return 0.5 * sphere_tau_span(lambda) - tau_gap(lambda, omega);
}

QuadResult sphere_area(double lambda, const QuadratureSpec& spec) {
  return sr_area(sphere_surface(lambda), spec);
}

QuadResult ball_volume(double lambda, const QuadratureSpec& spec) {
  if (lambda <= 0.0)
    throw DomainExceeded("ball_volume: lambda must be positive");
  const double tau_span = sphere_tau_span(lambda);
  RevolutionRegion region;
  region.omega0 = 0.0;
  region.omega1 = sphere_omega_max(lambda);
  region.tau_bounds = [lambda, tau_span](double omega) {
    const double mu = generating_tau(lambda, omega);
    return std::pair<double, double>(mu, tau_span - mu);
  };
  return volume_revolution(region, spec);
}

namespace {

// Decreasing profile table on a log grid, for bracketing the bisection.
struct ProfileTable {
  std::vector<double> lambda;
  std::vector<double> volume;
};

const ProfileTable& profile_table() {
  static const ProfileTable table = [] {
    ProfileTable t;
    const int n = 97;
    const double lo = std::log(1e-6), hi = std::log(1e3);
    QuadratureSpec spec{.points = 64, .panels = 2, .max_levels = 9, .tol = 1e-9};
    for (int i = 0; i < n; ++i) {
      const double l = std::exp(lo + (hi - lo) * i / (n - 1));
      t.lambda.push_back(l);
      t.volume.push_back(ball_volume(l, spec).value);
    }
    for (std::size_t i = 1; i < t.volume.size(); ++i)
      if (t.volume[i] >= t.volume[i - 1])
        throw NoConvergence("profile table is not strictly decreasing");
    return t;
  }();
  return table;
}

}  // namespace

double mu_for_volume(double V) {
  const double half_volume = pi * pi;  // half the total volume of the sphere
  if (!(V > 0.0 && V < half_volume))
    throw VolumeOutOfRange("mu_for_volume: V must lie in (0, pi^2)");

  const ProfileTable& t = profile_table();
  double lo = t.lambda.front(), hi = t.lambda.back();
  for (std::size_t i = 1; i < t.lambda.size(); ++i) {
    if (t.volume[i] <= V) {
      lo = t.lambda[i - 1];
      hi = t.lambda[i];
      break;
    }
  }
  if (V >= t.volume.front()) lo = hi = t.lambda.front();
  if (V <= t.volume.back())
    throw NoConvergence("mu_for_volume: V below the tabulated profile range");

  QuadratureSpec spec{.points = 64, .panels = 2, .max_levels = 9, .tol = 1e-10};
  double vlo = ball_volume(lo, spec).value;
  if (std::abs(vlo - V) < 1e-9) return lo;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double vm = ball_volume(mid, spec).value;
    if (std::abs(vm - V) < 1e-9) return mid;
    if (vm > V)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-14 * std::max(1.0, hi)) return 0.5 * (lo + hi);
  }
  throw NoConvergence("mu_for_volume: bisection failed to settle");
}

bool ball_contains(double lambda, const Point& p) {
  if (lambda <= 0.0)
    throw DomainExceeded("ball_contains: lambda must be positive");
  const double omega_max = sphere_omega_max(lambda);
  const double omega = dist_to_axis(p);
  if (omega > omega_max + 1e-10) return false;
  const double mu = generating_tau(lambda, std::min(omega, omega_max));
  const double tau = cylindrical(p).tau;
  const double tol = 1e-8;
  return tau >= mu - tol && tau <= sphere_tau_span(lambda) - mu + tol;
}

SphereSpec make_sphere_spec(double lambda, const QuadratureSpec& spec) {
  SphereSpec s;
  s.lambda = lambda;
  s.s_max = sphere_s_max(lambda);
  s.tau_span = sphere_tau_span(lambda);
  s.omega_max = sphere_omega_max(lambda);
  const QuadResult a = sphere_area(lambda, spec);
  s.area = a.value;
  s.area_error = a.error;
  if (lambda > 0.0) {
    const QuadResult v = ball_volume(lambda);
    s.volume = v.value;
    s.volume_error = v.error;
  } else {
    s.volume = pi * pi;  // enclosed half-sphere volume in the flat limit
    s.volume_error = 0.0;
  }
  return s;
}

}  // namespace srs3
