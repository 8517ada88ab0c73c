#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srs3/rng.hpp"
#include "srs3/s3.hpp"

using namespace srs3;

namespace {
double ang_dist(double a, double b) {
  const double d = wrap_2pi(a - b);
  return std::min(d, 2.0 * pi - d);
}
}  // namespace

TEST_CASE("quaternion product basics") {
  const Point e = identity_point();
  CounterRng rng(1);
  for (int i = 0; i < 100; ++i) {
    const Point p = random_point(rng);
    CHECK((quat_mul(e, p) - p).norm() < 1e-14);
    CHECK((quat_mul(p, qconj(p)) - e).norm() < 1e-12);
    CHECK(std::abs(quat_mul(p, random_point(rng)).norm() - 1.0) < 1e-12);
  }
  // i * j = k
  CHECK((qmul(Vec4(0, 1, 0, 0), Vec4(0, 0, 1, 0)) - Vec4(0, 0, 0, 1)).norm() ==
        0.0);
  // associativity on random triples
  for (int i = 0; i < 100; ++i) {
    const Point a = random_point(rng), b = random_point(rng),
                c = random_point(rng);
    CHECK((qmul(qmul(a, b), c) - qmul(a, qmul(b, c))).norm() < 1e-14);
  }
}

TEST_CASE("frame at the identity and orthonormality") {
  const Frame f = frame(identity_point());
  CHECK((f.t - Vec4(0, 1, 0, 0)).norm() == 0.0);
  CHECK((f.e1 - Vec4(0, 0, 1, 0)).norm() == 0.0);
  CHECK((f.e2 - Vec4(0, 0, 0, 1)).norm() == 0.0);

  CounterRng rng(2);
  for (int i = 0; i < 1000; ++i) {
    const Point p = random_point(rng);
    const Frame fr = frame(p);
    CHECK(std::abs(fr.e1.dot(fr.e2)) < 1e-10);
    CHECK(std::abs(fr.e1.dot(fr.t)) < 1e-10);
    CHECK(std::abs(fr.e2.dot(fr.t)) < 1e-10);
    CHECK(std::abs(fr.e1.norm() - 1.0) < 1e-12);
    CHECK(std::abs(fr.e1.dot(p)) < 1e-12);  // tangency
  }
}

TEST_CASE("rotation carries the frame through the expected angle") {
  CounterRng rng(3);
  for (int i = 0; i < 200; ++i) {
    const Point p = random_point(rng);
    const double theta = rng.uniform(0.0, 2.0 * pi);
    const Point q = rotate(theta, p);
    const Frame fp = frame(p), fq = frame(q);
    const Vec4 carried = rotate_vec(theta, fp.e1);
    const Vec4 expected = std::cos(theta) * fq.e1 + std::sin(theta) * fq.e2;
    CHECK((carried - expected).norm() < 1e-12);
    CHECK((rotate_vec(theta, fp.t) - fq.t).norm() < 1e-12);
  }
}

TEST_CASE("rot90 is the 90 degree horizontal rotation") {
  CounterRng rng(4);
  for (int i = 0; i < 200; ++i) {
    const Point p = random_point(rng);
    const Frame f = frame(p);
    CHECK((rot90(TangentVector{p, f.e1}).v - f.e2).norm() < 1e-12);
    const TangentVector v = random_horizontal(rng, p);
    const TangentVector jv = rot90(v);
    CHECK(std::abs(jv.v.dot(v.v)) < 1e-12);
    CHECK(std::abs(jv.norm() - v.norm()) < 1e-12);
    CHECK((rot90(jv).v + v.v).norm() < 1e-12);
  }
  const Point p = random_point(rng);
  CHECK_THROWS_AS(rot90(TangentVector{p, vertical_dir(p)}),
                  HorizontalityViolation);
}

TEST_CASE("distances") {
  const Point e = identity_point();
  CHECK(dist(e, e) == 0.0);
  CHECK(dist(e, Point(-e)) == doctest::Approx(pi));
  CHECK(dist(e, Point(0, 1, 0, 0)) == doctest::Approx(0.5 * pi));
  CHECK(dist_to_axis(e) == 0.0);
  CHECK(dist_to_axis(Point(0, 0, 1, 0)) == doctest::Approx(0.5 * pi));

  CounterRng rng(5);
  for (int i = 0; i < 500; ++i) {
    const double omega = rng.uniform(0.0, 0.5 * pi);
    const Point p = from_cylindrical(omega, rng.uniform(0.0, 2 * pi),
                                     rng.uniform(0.0, 2 * pi));
    CHECK(dist_to_axis(p) == doctest::Approx(omega).epsilon(1e-12));
  }
}

TEST_CASE("hopf map") {
  CHECK((hopf(identity_point()) - Point(0, 1, 0, 0)).norm() < 1e-15);
  CounterRng rng(6);
  for (int i = 0; i < 500; ++i) {
    const Point p = random_point(rng);
    const Point h = hopf(p);
    CHECK(std::abs(h[0]) < 1e-14);
    // component formula in terms of z1 = x1 + i y1, z2 = x2 + i y2
    const double z1r = p[0], z1i = p[1], z2r = p[2], z2i = p[3];
    const Vec4 formula(0.0, z1r * z1r + z1i * z1i - z2r * z2r - z2i * z2i,
                       2.0 * (z1i * z2r - z1r * z2i),
                       2.0 * (z1r * z2r + z1i * z2i));
    CHECK((h - formula).norm() < 1e-12);
    // fiber invariance
    const double t = rng.uniform(0.0, 2 * pi);
    CHECK((hopf(vertical_translate(t, p)) - h).norm() < 1e-12);
  }
}

TEST_CASE("isometries act on cylindrical coordinates as shifts") {
  CHECK((rotate(1.3, identity_point()) - identity_point()).norm() == 0.0);
  CounterRng rng(7);
  for (int i = 0; i < 500; ++i) {
    const double omega = rng.uniform(0.05, 0.5 * pi - 0.05);
    const double tau = rng.uniform(0.0, 2 * pi);
    const double theta = rng.uniform(0.0, 2 * pi);
    const Point p = from_cylindrical(omega, tau, theta);

    const double t = rng.uniform(0.0, 2 * pi);
    const Cylindrical ct = cylindrical(vertical_translate(t, p));
    CHECK(ct.omega == doctest::Approx(omega).epsilon(1e-12));
    CHECK(ang_dist(ct.tau, tau + t) < 1e-10);
    CHECK(ang_dist(ct.theta, theta + t) < 1e-10);

    const double th0 = rng.uniform(0.0, 2 * pi);
    const Cylindrical cr = cylindrical(rotate(th0, p));
    CHECK(cr.omega == doctest::Approx(omega).epsilon(1e-12));
    CHECK(ang_dist(cr.tau, tau) < 1e-10);
    CHECK(ang_dist(cr.theta, theta + th0) < 1e-10);

    // isometry invariance of both distances
    const Point q = random_point(rng);
    CHECK(std::abs(dist(rotate(th0, p), rotate(th0, q)) - dist(p, q)) < 1e-12);
    CHECK(std::abs(dist_to_axis(rotate(th0, p)) - omega) < 1e-12);
    CHECK(std::abs(dist_to_axis(vertical_translate(t, p)) - omega) < 1e-12);
  }
}

TEST_CASE("cylindrical round trip") {
  CHECK(cylindrical(identity_point()).omega == 0.0);
  CHECK(cylindrical(identity_point()).tau == 0.0);
  CHECK(cylindrical(identity_point()).theta == 0.0);
  CHECK((from_cylindrical(0.5 * pi, 1.7, 0.0) - Point(0, 0, 1, 0)).norm() <
        1e-15);

  CounterRng rng(8);
  for (int i = 0; i < 1000; ++i) {
    const Point p = random_point(rng);
    CHECK((from_cylindrical(cylindrical(p)) - p).norm() < 1e-12);
  }
}

TEST_CASE("frame coordinates reconstruct tangent vectors") {
  CounterRng rng(9);
  for (int i = 0; i < 500; ++i) {
    const Point p = random_point(rng);
    const Frame f = frame(p);
    const Vec4 v = rng.uniform(-2, 2) * f.e1 + rng.uniform(-2, 2) * f.e2 +
                   rng.uniform(-2, 2) * f.t;
    const FrameCoords c = frame_coords(TangentVector{p, v});
    CHECK((tangent_from_frame(p, c).v - v).norm() < 1e-10);
  }
}
