#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srs3/isoperim.hpp"
#include "srs3/pansu.hpp"
#include "srs3/rng.hpp"

using namespace srs3;

TEST_CASE("ball trial set reproduces the profile quantities") {
  for (double lambda : {0.5, 1.0, 2.0}) {
    const TrialSet ball = trial_pansu_ball(lambda);
    CHECK_NOTHROW(check_hypotheses(ball));
    CHECK(trial_volume(ball).value ==
          doctest::Approx(ball_volume(lambda).value).epsilon(1e-8));
    CHECK(trial_boundary_area(ball).value ==
          doctest::Approx(sphere_area(lambda).value).epsilon(1e-8));
  }
}

TEST_CASE("comparison at the equality case") {
  for (double lambda : {0.5, 1.0, 2.0}) {
    const CompareReport r = compare(trial_pansu_ball(lambda));
    CHECK(std::abs(r.mu - lambda) < 1e-6);
    const double tol =
        10.0 * std::max(r.area_error + r.sphere_area_mu_error, 1e-9);
    CHECK(std::abs(r.slack) < tol);
    CHECK(std::abs(r.penalized_slack) < tol);
  }
}

TEST_CASE("non-ball trial sets have strictly positive slack") {
  std::vector<TrialSet> sets;
  sets.push_back(trial_truncated_tube(1.0, 0.2));
  sets.push_back(trial_truncated_tube(1.0, 0.35));
  sets.push_back(trial_truncated_tube(2.0, 0.15));
  sets.push_back(trial_bump(1.0, 0.25));
  sets.push_back(trial_bump(1.0, 0.4, 0.3));
  sets.push_back(trial_bump(0.5, 0.5, -0.4));
  sets.push_back(trial_bump(2.0, 0.2, 0.0, 2));
  sets.push_back(trial_bump(1.5, 0.3, 0.5, 2));
  for (const TrialSet& set : sets) {
    const CompareReport r = compare(set);
    CAPTURE(set.id);
    CHECK(r.slack > 0.0);
    CHECK(r.penalized_slack > -1e-8);
  }
}

TEST_CASE("oversized sets route through the complementary volume") {
  // this tube occupies more than half the total volume
  const TrialSet fat = trial_truncated_tube(0.15, 1.7);
  const CompareReport r = compare(fat);
  CHECK(r.volume > pi * pi);
  CHECK(r.effective_volume == doctest::Approx(2 * pi * pi - r.volume));
  CHECK(r.effective_volume < pi * pi);
  CHECK(r.slack > 0.0);
}

TEST_CASE("hypothesis violations are detected") {
  CHECK_THROWS_AS(compare(trial_bad_disk(1.0)), HypothesisViolation);

  // a set poking out of the tube
  TrialSet poking = trial_bump(1.0, 0.25);
  const double omega_max = sphere_omega_max(1.0);
  const double tau_mid = 0.5 * sphere_tau_span(1.0);
  poking.pieces[0].gamma = [=](double u) {
    return Eigen::Vector2d(1.2 * omega_max * std::sin(pi * u),
                           tau_mid - 0.25 * std::cos(pi * u));
  };
  poking.pieces[0].dgamma = nullptr;
  CHECK_THROWS_AS(check_hypotheses(poking), HypothesisViolation);

  // a set that never reaches the equatorial latitude
  TrialSet shy = trial_bump(1.0, 0.25);
  shy.pieces[0].gamma = [=](double u) {
    return Eigen::Vector2d(0.5 * omega_max * std::sin(pi * u),
                           tau_mid - 0.3 - 0.25 * std::cos(pi * u));
  };
  shy.pieces[0].dgamma = nullptr;
  CHECK_THROWS_AS(check_hypotheses(shy), HypothesisViolation);
}

TEST_CASE("penalized comparison function") {
  const double V = ball_volume(1.0).value;

  // penalty vanishes at the matching curvature
  CHECK(penalized_area(1.0, V) ==
        doctest::Approx(sphere_area(1.0).value).epsilon(1e-7));

  // first derivative: 2 (V - m(alpha))
  for (double alpha : {0.5, 0.8, 1.0, 1.5, 2.2}) {
    const double expected = 2.0 * (V - ball_volume(alpha).value);
    CHECK(std::abs(penalized_area_d1(alpha, V) - expected) < 1e-4);
  }
  // strict convexity on a grid
  for (double alpha = 0.3; alpha <= 2.5; alpha += 0.2)
    CHECK(penalized_area_d2(alpha, V) > 0.0);

  // the sign change of the derivative brackets the inverse profile
  double lo = 0.5, hi = 2.0;
  CHECK(penalized_area_d1(lo, V) < 0.0);
  CHECK(penalized_area_d1(hi, V) > 0.0);
  for (int i = 0; i < 40; ++i) {
    const double mid = 0.5 * (lo + hi);
    (penalized_area_d1(mid, V) < 0.0 ? lo : hi) = mid;
  }
  CHECK(std::abs(0.5 * (lo + hi) - mu_for_volume(V)) < 1e-6);
}

TEST_CASE("stationarity of the penalized area along the family") {
  // A'(alpha) = 2 alpha m'(alpha) for the volume-preserving family
  const double d = 1e-4;
  for (double alpha : {0.6, 1.0, 1.7}) {
    const double a_prime =
        (sphere_area(alpha + d).value - sphere_area(alpha - d).value) /
        (2 * d);
    const double m_prime =
        (ball_volume(alpha + d).value - ball_volume(alpha - d).value) /
        (2 * d);
    CHECK(std::abs(a_prime - 2.0 * alpha * m_prime) < 1e-4);
  }
}

TEST_CASE("tube wall area") {
  for (double lambda : {0.5, 1.0, 2.0}) {
    const double rho = std::cos(sphere_omega_max(lambda));
    CHECK(tube_boundary_area(lambda).value ==
          doctest::Approx(4.0 * pi * pi * rho * std::sqrt(1.0 - rho * rho))
              .epsilon(1e-9));
  }

  // the sphere and the wall are tangent along the equatorial circle
  const double lambda = 1.0;
  const ParamSurface wall =
      clifford_torus(std::cos(sphere_omega_max(lambda)));
  const ParamSurface sphere = sphere_surface(lambda);
  CounterRng rng(51);
  for (int i = 0; i < 50; ++i) {
    const double theta = rng.uniform(0.0, 2 * pi);
    const Point p = geodesic(lambda, theta, 0.5 * sphere_s_max(lambda));
    const Cylindrical c = cylindrical(p);
    // wall chart: (tau, theta); sphere chart: (-theta, s)
    const Vec4 nw = unit_normal(wall, c.tau, c.theta).v;
    const Vec4 ns =
        unit_normal(sphere, -theta, 0.5 * sphere_s_max(lambda)).v;
    CHECK(std::min((nw - ns).norm(), (nw + ns).norm()) < 1e-6);
  }
}

TEST_CASE("comparison chain holds for every suite set") {
  std::vector<TrialSet> sets;
  sets.push_back(trial_pansu_ball(1.0));
  sets.push_back(trial_truncated_tube(1.0, 0.3));
  sets.push_back(trial_bump(0.7, 0.3, 0.2));
  for (const TrialSet& set : sets) {
    const CompareReport r = compare(set);
    // A >= xi(lambda_tube) >= xi(mu) = A(Sigma_mu), within tolerance
    const double xi_tube = penalized_area(set.lambda_tube, r.volume);
    const double xi_mu = penalized_area(r.mu, r.volume);
    CHECK(r.area >= xi_tube - 1e-6);
    CHECK(xi_tube >= xi_mu - 1e-6);
    CHECK(xi_mu == doctest::Approx(r.sphere_area_mu).epsilon(1e-5));
  }
}
