#include "srs3/isoperim.hpp"

#include <algorithm>
#include <cmath>

#include "srs3/plateau.hpp"

namespace srs3 {

namespace {

using Eigen::Vector2d;

Vector2d piece_point(const CurvePiece& c, double u) { return c.gamma(u); }

Vector2d piece_deriv(const CurvePiece& c, double u) {
  if (c.dgamma) return c.dgamma(u);
  const double h = 1e-6;
  const double lo = std::max(0.0, u - h), hi = std::min(1.0, u + h);
  return Vector2d((c.gamma(hi) - c.gamma(lo)) / (hi - lo));
}

// Rotationally invariant surface swept by one generating-curve piece.
ParamSurface piece_surface(const CurvePiece& c) {
  ParamSurface S;
  S.eval = [c](double u, double theta) {
    const Vector2d g = c.gamma(u);
    return from_cylindrical(g[0], g[1], theta);
  };
  S.du = [c](double u, double theta) {
    const Vector2d g = c.gamma(u);
    const Vector2d d = piece_deriv(c, u);
    const double co = std::cos(g[0]), so = std::sin(g[0]);
    const double ct = std::cos(g[1]), st = std::sin(g[1]);
    const Vec4 domega(-so * ct, -so * st, co * std::cos(theta),
                      co * std::sin(theta));
    const Vec4 dtau(-co * st, co * ct, 0.0, 0.0);
    return Vec4(d[0] * domega + d[1] * dtau);
  };
  S.dv = [c](double u, double theta) {
    const Vector2d g = c.gamma(u);
    const double so = std::sin(g[0]);
    return Vec4(0.0, 0.0, -so * std::sin(theta), so * std::cos(theta));
  };
  S.u0 = 0.0;
  S.u1 = 1.0;
  S.v0 = 0.0;
  S.v1 = 2.0 * pi;
  return S;
}

// Locked rules: finite differences in alpha must see smooth functions, so
// these evaluations never adapt their panel layout.
double sphere_area_locked(double alpha) {
  static const QuadratureSpec spec{
      .points = 64, .panels = 4, .max_levels = 0, .tol = 0.0, .adaptive = false};
  return sphere_area(alpha, spec).value;
}

double ball_volume_locked(double alpha) {
  static const QuadratureSpec spec{.points = 64,
                                   .panels = 256,
                                   .max_levels = 0,
                                   .tol = 0.0,
                                   .adaptive = false};
  return ball_volume(alpha, spec).value;
}

}  // namespace

TrialSet trial_pansu_ball(double lambda) {
  if (lambda <= 0.0)
    throw DomainExceeded("trial_pansu_ball: lambda must be positive");
  const double s_max = sphere_s_max(lambda);
  const double r = std::sqrt(1.0 + lambda * lambda);
  CurvePiece piece;
  piece.gamma = [lambda, s_max, r](double u) {
    const double s = u * s_max;
    // r*s stays in [0, pi]; clamping the sine keeps atan2 on the branch
    // when rounding pushes it to -0 at the endpoints.
    const double sin_rs = std::max(0.0, std::sin(r * s));
    const double omega = std::asin(std::min(sin_rs / r, 1.0));
    const double tau =
        -lambda * s + std::atan2(lambda / r * sin_rs, std::cos(r * s));
    return Vector2d(omega, tau);
  };
  piece.dgamma = [lambda, s_max, r](double u) {
    const double s = u * s_max;
    const double sinw = std::sin(r * s) / r;
    const double cosw = std::sqrt(std::max(0.0, 1.0 - sinw * sinw));
    const double domega = std::cos(r * s) / std::max(cosw, 1e-300);
    const double tan2 = sinw * sinw / std::max(cosw * cosw, 1e-300);
    return Vector2d(s_max * domega, s_max * lambda * tan2);
  };
  return TrialSet{"pansu-ball", {piece}, lambda};
}

TrialSet trial_truncated_tube(double lambda, double half_width) {
  if (lambda <= 0.0 || half_width <= 0.0)
    throw DomainExceeded("trial_truncated_tube: bad parameters");
  const double omega_max = sphere_omega_max(lambda);
  const double tau_mid = 0.5 * sphere_tau_span(lambda);
  const double t0 = tau_mid - half_width, t1 = tau_mid + half_width;
  CurvePiece bottom{[=](double u) { return Vector2d(u * omega_max, t0); },
                    [=](double) { return Vector2d(omega_max, 0.0); }};
  CurvePiece wall{
      [=](double u) { return Vector2d(omega_max, t0 + u * (t1 - t0)); },
      [=](double) { return Vector2d(0.0, t1 - t0); }};
  CurvePiece top{[=](double u) { return Vector2d((1.0 - u) * omega_max, t1); },
                 [=](double) { return Vector2d(-omega_max, 0.0); }};
  return TrialSet{"truncated-tube", {bottom, wall, top}, lambda};
}

TrialSet trial_bump(double lambda, double c, double skew, int shape) {
  if (lambda <= 0.0 || c <= 0.0 || std::abs(skew) >= 1.0 || shape < 1)
    throw DomainExceeded("trial_bump: bad parameters");
  const double omega_max = sphere_omega_max(lambda);
  const double tau_mid = 0.5 * sphere_tau_span(lambda);
  CurvePiece piece;
  piece.gamma = [=](double u) {
    const double sp = std::sin(pi * u);
    const double omega = omega_max * std::pow(sp, shape);
    const double tau =
        tau_mid - c * std::cos(pi * u) * (1.0 + skew * std::sin(pi * u));
    return Vector2d(omega, tau);
  };
  piece.dgamma = [=](double u) {
    const double sp = std::sin(pi * u), cp = std::cos(pi * u);
    const double domega =
        omega_max * shape * std::pow(sp, shape - 1) * cp * pi;
    const double dtau = c * pi * sp * (1.0 + skew * sp) -
                        c * cp * skew * pi * cp;
    return Vector2d(domega, dtau);
  };
  return TrialSet{"bump", {piece}, lambda};
}

TrialSet trial_bad_disk(double lambda) {
  TrialSet set = trial_bump(lambda, 0.3);
  const double omega_max = sphere_omega_max(lambda);
  const double tau_mid = 0.5 * sphere_tau_span(lambda);
  CurvePiece piece;
  piece.gamma = [=](double u) {
    return Vector2d(0.8 * omega_max * std::sin(pi * u),
                    tau_mid - 0.3 * std::cos(pi * u));
  };
  set.id = "bad-disk";
  set.pieces = {piece};
  return set;
}

void check_hypotheses(const TrialSet& set) {
  const double omega_max = sphere_omega_max(set.lambda_tube);
  const double tau_mid = 0.5 * sphere_tau_span(set.lambda_tube);
  const int dense = 4096;
  int crossings = 0;
  for (const CurvePiece& piece : set.pieces) {
    double prev_g = piece_point(piece, 0.0)[1] - tau_mid;
    for (int i = 0; i <= dense; ++i) {
      const double u = static_cast<double>(i) / dense;
      const Vector2d g = piece_point(piece, u);
      if (g[0] > omega_max + 1e-9)
        throw HypothesisViolation("trial set leaves the solid tube");
      const double gg = g[1] - tau_mid;
      const bool at_level = std::abs(gg) < 1e-12;
      if (i > 0 && (gg * prev_g < 0.0 || at_level)) {
        // Crossing of the equatorial latitude: refine and check the
        // radius there (must equal the full tube radius).
        double lo = static_cast<double>(i - 1) / dense, hi = u;
        for (int it = 0; it < 60; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double gm = piece_point(piece, mid)[1] - tau_mid;
          if (gm * prev_g <= 0.0)
            hi = mid;
          else
            lo = mid;
        }
        const Vector2d at = piece_point(piece, 0.5 * (lo + hi));
        if (std::abs(at[0] - omega_max) > 1e-6)
          throw HypothesisViolation(
              "trial set does not meet the equatorial latitude in the full "
              "disk section");
        ++crossings;
        }
      if (!at_level) prev_g = gg;
    }
  }
  if (crossings == 0)
    throw HypothesisViolation(
        "trial set boundary never meets the equatorial latitude");
}

QuadResult trial_volume(const TrialSet& set, const QuadratureSpec& spec) {
  QuadResult total;
  for (const CurvePiece& piece : set.pieces) {
    auto integrand = [&piece](double u) {
      const Vector2d g = piece_point(piece, u);
      const Vector2d d = piece_deriv(piece, u);
      const double so = std::sin(g[0]);
      return 0.5 * so * so * d[1];
    };
    const QuadResult r = integrate_1d(integrand, 0.0, 1.0, spec);
    total.value += r.value;
    total.error += r.error;
    total.levels = std::max(total.levels, r.levels);
  }
  total.value *= 2.0 * pi;
  total.error *= 2.0 * pi;
  return total;
}

QuadResult trial_boundary_area(const TrialSet& set,
                               const QuadratureSpec& spec) {
  QuadResult total;
  for (const CurvePiece& piece : set.pieces) {
    const QuadResult r = sr_area(piece_surface(piece), spec);
    total.value += r.value;
    total.error += r.error;
    total.levels = std::max(total.levels, r.levels);
  }
  return total;
}

double penalized_area(double alpha, double V) {
  if (alpha <= 0.0)
    throw DomainExceeded("penalized_area: alpha must be positive");
  return sphere_area_locked(alpha) +
         2.0 * alpha * (V - ball_volume_locked(alpha));
}

double penalized_area_d1(double alpha, double V, double dalpha) {
  return (penalized_area(alpha + dalpha, V) -
          penalized_area(alpha - dalpha, V)) /
         (2.0 * dalpha);
}

double penalized_area_d2(double alpha, double V, double dalpha) {
  return (penalized_area(alpha + dalpha, V) - 2.0 * penalized_area(alpha, V) +
          penalized_area(alpha - dalpha, V)) /
         (dalpha * dalpha);
}

QuadResult tube_boundary_area(double lambda, const QuadratureSpec& spec) {
  if (lambda <= 0.0)
    throw DomainExceeded("tube_boundary_area: lambda must be positive");
  return sr_area(clifford_torus(std::cos(sphere_omega_max(lambda))), spec);
}

CompareReport compare(const TrialSet& set, const QuadratureSpec& spec) {
  check_hypotheses(set);

  CompareReport rep;
  rep.id = set.id;
  rep.lambda_tube = set.lambda_tube;

  const QuadResult vol = trial_volume(set, spec);
  rep.volume = vol.value;
  rep.volume_error = vol.error;
  const double total_volume = 2.0 * pi * pi;
  rep.effective_volume = std::min(rep.volume, total_volume - rep.volume);

  const QuadResult area = trial_boundary_area(set, spec);
  rep.area = area.value;
  rep.area_error = area.error;

  rep.mu = mu_for_volume(rep.effective_volume);
  const QuadResult amu = sphere_area(rep.mu, spec);
  rep.sphere_area_mu = amu.value;
  rep.sphere_area_mu_error = amu.error;
  rep.slack = rep.area - rep.sphere_area_mu;

  if (set.lambda_tube > 0.0) {
    const double lam = set.lambda_tube;
    const double rhs = sphere_area(lam, spec).value -
                       2.0 * lam * ball_volume(lam).value;
    rep.penalized_slack = (rep.area - 2.0 * lam * rep.volume) - rhs;
  } else {
    // Flat-tube limit: the reference value is twice the ruled-family
    // minimum of the half-range chart.
    const double rhs =
        2.0 * plateau_area(AngleFunction::identity(), 0.0, 0.5 * pi).value;
    rep.penalized_slack = rep.area - rhs;
  }
  return rep;
}

}  // namespace srs3
