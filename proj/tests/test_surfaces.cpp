#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "golden.hpp"
#include "srs3/pansu.hpp"
#include "srs3/rng.hpp"
#include "srs3/surfaces.hpp"

using namespace srs3;

TEST_CASE("unit normal orientation and orthogonality") {
  CounterRng rng(11);
  const ParamSurface torus = clifford_torus(0.6);
  for (int i = 0; i < 100; ++i) {
    const double u = rng.uniform(0.0, 2 * pi), v = rng.uniform(0.0, 2 * pi);
    const TangentVector n = unit_normal(torus, u, v);
    const auto [fu, fv] = partials(torus, u, v);
    CHECK(std::abs(n.norm() - 1.0) < 1e-12);
    CHECK(std::abs(n.v.dot(fu)) < 1e-8);
    CHECK(std::abs(n.v.dot(fv)) < 1e-8);
    // the torus is a level set of the axis distance: N points radially
    const Cylindrical c = cylindrical(n.base);
    const Vec4 radial =
        ((from_cylindrical(c.omega - 1e-6, c.tau, c.theta) - n.base) / 1e-6)
            .normalized();
    CHECK(std::abs(std::abs(n.v.dot(radial)) - 1.0) < 1e-4);
  }

  // totally geodesic sphere {y1 = 0}: normal is +/- the projected gradient
  const ParamSurface sphere0 = sphere_surface(0.0);
  for (int i = 0; i < 100; ++i) {
    const double th = rng.uniform(0.0, 2 * pi), s = rng.uniform(0.1, pi - 0.1);
    const TangentVector n = unit_normal(sphere0, th, s);
    Vec4 grad = Vec4(0, 1, 0, 0);
    grad -= grad.dot(n.base) * n.base;
    grad.normalize();
    CHECK(std::abs(std::abs(n.v.dot(grad)) - 1.0) < 1e-10);
  }

  // near the poles of a rotational sphere the tangent plane turns
  // horizontal, so N approaches +/- T
  const ParamSurface sphere1 = sphere_surface(1.0);
  const TangentVector n = unit_normal(sphere1, 0.3, 1e-4);
  CHECK(std::abs(std::abs(n.v.dot(vertical_dir(n.base))) - 1.0) < 1e-6);
  CHECK_THROWS_AS(unit_normal(sphere1, 0.3, 0.0), DegenerateParametrization);
}

TEST_CASE("horizontal gauss map decomposition") {
  CounterRng rng(12);
  const ParamSurface torus = clifford_torus(0.6);
  for (int i = 0; i < 200; ++i) {
    const double u = rng.uniform(0.0, 2 * pi), v = rng.uniform(0.0, 2 * pi);
    const HorizontalGauss g = horizontal_gauss(torus, u, v);
    CHECK(g.norm_nh == doctest::Approx(1.0).epsilon(1e-10));  // T is tangent
    CHECK(std::abs(g.nu_h.norm() - 1.0) < 1e-10);
    CHECK(std::abs(g.nu_h.v.dot(vertical_dir(g.nu_h.base))) < 1e-10);
  }
  const ParamSurface sphere1 = sphere_surface(1.0);
  for (int i = 0; i < 200; ++i) {
    const double th = rng.uniform(0.0, 2 * pi);
    const double s = rng.uniform(0.1, sphere_s_max(1.0) - 0.1);
    const TangentVector n = unit_normal(sphere1, th, s);
    const double nt = n.v.dot(vertical_dir(n.base));
    const double nh = horizontal_gauss(sphere1, th, s).norm_nh;
    CHECK(nh * nh + nt * nt == doctest::Approx(1.0).epsilon(1e-10));
  }
  // singular at the poles
  CHECK(horizontal_norm(sphere1, 0.3, 1e-6) < 1e-5);
  CHECK_THROWS_AS(horizontal_gauss(sphere1, 0.3, 1e-9), SingularPoint);
}

TEST_CASE("characteristic field is horizontal, tangent, orthogonal to nu_h") {
  CounterRng rng(13);
  const ParamSurface sphere1 = sphere_surface(1.0);
  for (int i = 0; i < 100; ++i) {
    const double th = rng.uniform(0.0, 2 * pi);
    const double s = rng.uniform(0.2, sphere_s_max(1.0) - 0.2);
    const TangentVector z = characteristic_field(sphere1, th, s);
    const HorizontalGauss g = horizontal_gauss(sphere1, th, s);
    CHECK(std::abs(z.v.dot(g.nu_h.v)) < 1e-10);
    CHECK(std::abs(z.v.dot(vertical_dir(z.base))) < 1e-10);
    CHECK(std::abs(z.v.dot(unit_normal(sphere1, th, s).v)) < 1e-8);
  }
}

TEST_CASE("sub-Riemannian areas of the standard surfaces") {
  const QuadResult a0 = sr_area(sphere_surface(0.0));
  CHECK(a0.value == doctest::Approx(pi * pi).epsilon(1e-9));

  ParamSurface half = sphere_surface(0.0);
  half.v1 = 0.5 * pi;  // the half bounded by the equatorial circle
  CHECK(sr_area(half).value == doctest::Approx(0.5 * pi * pi).epsilon(1e-9));

  const QuadResult a1 = sr_area(sphere_surface(1.0));
  CHECK(std::abs(a1.value - golden::sphere_area_1) <
        4.0 * golden::sphere_area_1_stderr);

  // vertical torus: |N_h| = 1, so the area is the flat-torus area
  const double rho = 0.6;
  const QuadResult at = sr_area(clifford_torus(rho));
  CHECK(at.value ==
        doctest::Approx(4.0 * pi * pi * rho * std::sqrt(1.0 - rho * rho))
            .epsilon(1e-9));
}

TEST_CASE("area bounds and isometry invariance") {
  for (double lambda : {0.0, 0.7, 2.0}) {
    const ParamSurface S = sphere_surface(lambda);
    const double sr = sr_area(S).value;
    const double riem = riemannian_area(S).value;
    CHECK(sr <= riem * (1.0 + 1e-12));

    // composing with an isometry preserves the area
    ParamSurface moved;
    moved.eval = [S](double u, double v) {
      return rotate(0.8, vertical_translate(1.1, S.eval(u, v)));
    };
    moved.u0 = S.u0;
    moved.u1 = S.u1;
    moved.v0 = S.v0;
    moved.v1 = S.v1;
    moved.fd_step = 1e-5;
    CHECK(sr_area(moved).value == doctest::Approx(sr).epsilon(1e-7));
  }
}

TEST_CASE("mean curvature by finite differences") {
  CounterRng rng(14);
  for (double lambda : {0.0, 1.0, 2.0}) {
    const ParamSurface S = sphere_surface(lambda);
    for (int i = 0; i < 25; ++i) {
      const double th = rng.uniform(0.0, 2 * pi);
      const double s = rng.uniform(0.15, 0.85) * sphere_s_max(lambda);
      const double mc = mean_curvature_check(S, th, s, 1e-4);
      CHECK(std::abs(mc + 2.0 * lambda) < (lambda == 0.0 ? 1e-4 : 1e-3));
    }
  }
  // error contracts when h is halved
  const ParamSurface S2 = sphere_surface(2.0);
  const double e1 = std::abs(mean_curvature_check(S2, 1.0, 0.4, 1e-3) + 4.0);
  const double e2 = std::abs(mean_curvature_check(S2, 1.0, 0.4, 5e-4) + 4.0);
  CHECK(e2 < 0.6 * e1);
  CHECK_THROWS_AS(mean_curvature_check(S2, 1.0, 0.4, 1e-2), DomainExceeded);
}

TEST_CASE("volumes of revolution") {
  CounterRng rng(15);
  // tube between two latitudes has a closed-form volume
  for (int i = 0; i < 20; ++i) {
    double x = rng.uniform(0.0, 0.5 * pi), y = rng.uniform(0.0, 0.5 * pi);
    if (x > y) std::swap(x, y);
    RevolutionRegion tube{x, y, [](double) {
                            return std::pair<double, double>(0.0, 2.0 * pi);
                          }};
    const double expected =
        2.0 * pi * pi *
        (std::sin(y) * std::sin(y) - std::sin(x) * std::sin(x));
    CHECK(std::abs(volume_revolution(tube).value - expected) < 1e-8);
  }
  RevolutionRegion all{0.0, 0.5 * pi, [](double) {
                         return std::pair<double, double>(0.0, 2.0 * pi);
                       }};
  CHECK(volume_revolution(all).value ==
        doctest::Approx(2.0 * pi * pi).epsilon(1e-10));
  RevolutionRegion half{0.0, 0.5 * pi, [](double) {
                          return std::pair<double, double>(0.0, pi);
                        }};
  CHECK(volume_revolution(half).value ==
        doctest::Approx(pi * pi).epsilon(1e-10));

  // indicator fallback: first-order accurate in the cell size
  RevolutionRegion cap{0.0, 0.7, [](double) {
                         return std::pair<double, double>(0.0, 2.0 * pi);
                       }};
  const double exact = volume_revolution(cap).value;
  const double coarse = volume_revolution_indicator(
      [](double omega, double) { return omega < 0.7; }, 300);
  const double fine = volume_revolution_indicator(
      [](double omega, double) { return omega < 0.7; }, 1200);
  CHECK(std::abs(coarse - exact) < 0.05);
  CHECK(std::abs(fine - exact) < 0.45 * std::abs(coarse - exact) + 1e-3);
}
