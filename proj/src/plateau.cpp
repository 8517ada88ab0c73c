#include "srs3/plateau.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "srs3/rng.hpp"

namespace srs3 {

namespace {

std::vector<double> uniform_knots(int n) {
  std::vector<double> eps(n);
  for (int i = 0; i < n; ++i) eps[i] = 2.0 * pi * i / n;
  return eps;
}

// Antiderivative of v(s) = a (1 - cos 2s) + 1 with a = (slope - 2) / 2.
double v_antideriv(double slope, double s) {
  const double a = 0.5 * (slope - 2.0);
  return a * (s - 0.5 * std::sin(2.0 * s)) + s;
}

// d/dslope of the antiderivative (used by the optimizer gradient).
double v_antideriv_dslope(double s) {
  return 0.5 * (s - 0.5 * std::sin(2.0 * s));
}

// Zeros of v in (0, pi), present exactly when slope < 1.
bool v_zeros(double slope, double& z_lo, double& z_hi) {
  if (slope >= 1.0) return false;
  const double s = 0.5 * std::acos(std::clamp(slope / (slope - 2.0), -1.0, 1.0));
  z_lo = s;
  z_hi = pi - s;
  return true;
}

// Closed-form integral of |v| over [s0, s1] within [0, pi].
double abs_v_integral(double slope, double s0, double s1) {
  std::vector<double> cuts = {s0, s1};
  double z0, z1;
  if (v_zeros(slope, z0, z1)) {
    if (z0 > s0 && z0 < s1) cuts.insert(cuts.end() - 1, z0);
    if (z1 > s0 && z1 < s1) cuts.insert(cuts.end() - 1, z1);
  }
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    total += std::abs(v_antideriv(slope, cuts[i + 1]) -
                      v_antideriv(slope, cuts[i]));
  return total;
}

// Gradient of the integral above with respect to the slope, on [0, pi/2].
double abs_v_integral_half_dslope(double slope) {
  const double half = 0.5 * pi;
  double z0, z1;
  if (!v_zeros(slope, z0, z1)) return v_antideriv_dslope(half);
  // Positive on [0, z0], negative on [z0, pi/2]; the moving zero does not
  // contribute because v vanishes there.
  return 2.0 * v_antideriv_dslope(z0) - v_antideriv_dslope(half);
}

}  // namespace

bool AngleFunction::closed(double tol) const {
  return std::abs(winding_ - std::round(winding_)) < tol;
}

AngleFunction AngleFunction::identity(int n) { return constant_slope(1.0, n); }

AngleFunction AngleFunction::constant_slope(double c, int n) {
  return AngleFunction(c, PeriodicCubicSpline(std::vector<double>(n, 0.0),
                                              2.0 * pi));
}

AngleFunction AngleFunction::sinusoidal(double amplitude, int mode, int n) {
  std::vector<double> psi(n);
  const auto eps = uniform_knots(n);
  for (int i = 0; i < n; ++i) psi[i] = amplitude * std::sin(mode * eps[i]);
  return AngleFunction(1.0, PeriodicCubicSpline(std::move(psi), 2.0 * pi));
}

AngleFunction AngleFunction::from_sigma_samples(
    const std::vector<double>& sigma, double winding) {
  const int n = static_cast<int>(sigma.size());
  std::vector<double> psi(n);
  const auto eps = uniform_knots(n);
  for (int i = 0; i < n; ++i) psi[i] = sigma[i] - winding * eps[i];
  return AngleFunction(winding, PeriodicCubicSpline(std::move(psi), 2.0 * pi));
}

AngleFunction AngleFunction::from_slope_samples(
    const std::vector<double>& slope) {
  const int n = static_cast<int>(slope.size());
  const PeriodicCubicSpline g(slope, 2.0 * pi);
  const double winding = g.period_integral() / (2.0 * pi);
  std::vector<double> sigma(n);
  const auto eps = uniform_knots(n);
  for (int i = 0; i < n; ++i) sigma[i] = g.integral(eps[i]);
  return from_sigma_samples(sigma, winding);
}

Point circle_base(double eps) {
  return Point(0.0, 0.0, std::cos(eps), std::sin(eps));
}

Vec4 ruled_direction(const AngleFunction& a, double eps) {
  const double d = eps - a.sigma(eps);
  return Vec4(-std::cos(d), std::sin(d), 0.0, 0.0);
}

Point ruled_point(const AngleFunction& a, double eps, double s) {
  return Point(std::cos(s) * circle_base(eps) +
               std::sin(s) * ruled_direction(a, eps));
}

Vec4 ruled_velocity(const AngleFunction& a, double eps, double s) {
  return -std::sin(s) * circle_base(eps) + std::cos(s) * ruled_direction(a, eps);
}

double v_profile(const AngleFunction& a, double eps, double s) {
  return 0.5 * (a.slope(eps) - 2.0) * (1.0 - std::cos(2.0 * s)) + 1.0;
}

double v_profile_ds(const AngleFunction& a, double eps, double s) {
  return (a.slope(eps) - 2.0) * std::sin(2.0 * s);
}

double area_element(const AngleFunction& a, double eps, double s) {
  const double v = v_profile(a, eps, s);
  const double vp = v_profile_ds(a, eps, s);
  return 0.5 * std::sqrt(4.0 * v * v + vp * vp);
}

double singular_arc_param(const AngleFunction& a, double eps) {
  const double slope = a.slope(eps);
  if (slope >= 1.0)
    throw NoSingularity("singular_arc_param: slope >= 1, chart is regular");
  return 0.5 * std::acos(std::clamp(slope / (slope - 2.0), -1.0, 1.0));
}

TangentVector ruled_normal(const AngleFunction& a, double eps, double s) {
  const double v = v_profile(a, eps, s);
  const double vp = v_profile_ds(a, eps, s);
  const double norm = std::sqrt(4.0 * v * v + vp * vp);
  if (norm < 1e-12)
    throw DegenerateParametrization("ruled_normal: immersion fails here");
  const Point p = ruled_point(a, eps, s);
  const Vec4 i(0, 1, 0, 0);
  const Vec4 jdot = qmul(i, ruled_velocity(a, eps, s));
  const Vec4 t = vertical_dir(p);
  return TangentVector{p, Vec4((-2.0 * v * jdot + vp * t) / norm)};
}

double ruled_horizontal_norm(const AngleFunction& a, double eps, double s) {
  const double v = v_profile(a, eps, s);
  const double vp = v_profile_ds(a, eps, s);
  const double norm = std::sqrt(4.0 * v * v + vp * vp);
  if (norm < 1e-12)
    throw DegenerateParametrization("ruled_horizontal_norm: immersion fails");
  return 2.0 * std::abs(v) / norm;
}

ParamSurface ruled_surface(const AngleFunction& a, double s0, double s1) {
  ParamSurface S;
  S.eval = [a](double eps, double s) { return ruled_point(a, eps, s); };
  S.du = [a](double eps, double s) {
    // dF/deps = (v'/2) J(gamma') + v T.
    const Point p = ruled_point(a, eps, s);
    const Vec4 i(0, 1, 0, 0);
    const Vec4 jdot = qmul(i, ruled_velocity(a, eps, s));
    return Vec4(0.5 * v_profile_ds(a, eps, s) * jdot +
                v_profile(a, eps, s) * vertical_dir(p));
  };
  S.dv = [a](double eps, double s) { return ruled_velocity(a, eps, s); };
  S.u0 = 0.0;
  S.u1 = 2.0 * pi;
  S.v0 = s0;
  S.v1 = s1;
  return S;
}

QuadResult plateau_area(const AngleFunction& a, double s0, double s1,
                        const QuadratureSpec& spec) {
  if (!(0.0 <= s0 && s0 < s1 && s1 <= pi + 1e-12))
    throw DomainExceeded("plateau_area: s-range must lie inside [0, pi]");
  auto integrand = [&a, s0, s1](double eps) {
    return abs_v_integral(a.slope(eps), s0, std::min(s1, pi));
  };
  // Panels aligned with the knot grid keep the integrand smooth per panel
  // (the spline derivative has curvature jumps at the knots).
  QuadratureSpec aligned = spec;
  aligned.panels =
      a.knots() * ((spec.panels + a.knots() - 1) / a.knots());
  return integrate_1d(integrand, 0.0, 2.0 * pi, aligned);
}

MinimizeResult minimize_sigma(int winding, int n, const MinimizeOptions& opts) {
  if (winding < 1)
    throw InfeasibleConstraint(
        "minimize_sigma: winding >= 1 is required; the slope constraint "
        "forces the mean slope above 1");
  if (n < 16) throw DomainExceeded("minimize_sigma: need n >= 16 knots");

  const double k = winding;
  std::vector<double> w;
  if (opts.start) {
    w = *opts.start;
    if (static_cast<int>(w.size()) != n)
      throw DomainExceeded("minimize_sigma: start size != n");
  } else {
    // Random smooth periodic start with mean k.
    CounterRng rng(opts.seed);
    w.assign(n, k);
    for (int mode = 1; mode <= 4; ++mode) {
      const double ca = rng.uniform(-0.5, 0.5) / mode;
      const double cb = rng.uniform(-0.5, 0.5) / mode;
      for (int i = 0; i < n; ++i) {
        const double eps = 2.0 * pi * i / n;
        w[i] += ca * std::cos(mode * eps) + cb * std::sin(mode * eps);
      }
    }
  }
  // Project the start onto the winding constraint mean(w) = k.
  const double mean0 = std::accumulate(w.begin(), w.end(), 0.0) / n;
  for (double& wi : w) wi += k - mean0;

  const double scale = 2.0 * pi / n;
  auto objective = [&](const std::vector<double>& v) {
    double area = 0.0;
    for (double vi : v) area += abs_v_integral(vi, 0.0, 0.5 * pi);
    return scale * area;
  };

  MinimizeResult out{AngleFunction::identity(n)};
  std::vector<double> grad(n);
  double prev = objective(w);
  out.trace.push_back(prev);
  int stalled = 0;
  bool converged = false;
  for (int iter = 1; iter <= opts.max_iter; ++iter) {
    double gmean = 0.0;
    for (int i = 0; i < n; ++i) {
      grad[i] = scale * abs_v_integral_half_dslope(w[i]);
      gmean += grad[i];
    }
    gmean /= n;
    double pg_max = 0.0;
    for (int i = 0; i < n; ++i) {
      const double pg = grad[i] - gmean;
      w[i] -= opts.step * pg;
      pg_max = std::max(pg_max, std::abs(pg));
    }
    // Re-project: descent preserves the mean analytically, this removes
    // floating-point drift over long runs.
    const double mean = std::accumulate(w.begin(), w.end(), 0.0) / n;
    for (double& wi : w) wi += k - mean;

    const double area = objective(w);
    out.trace.push_back(area);
    out.iterations = iter;
    if (pg_max < 1e-12) {
      converged = true;
      break;
    }
    stalled = (std::abs(prev - area) < opts.area_tol) ? stalled + 1 : 0;
    prev = area;
    if (stalled >= 3) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw NoConvergence("minimize_sigma: iteration cap reached");

  out.sigma = AngleFunction::from_slope_samples(w);
  out.area = plateau_area(out.sigma, 0.0, 0.5 * pi).value;
  return out;
}

}  // namespace srs3
