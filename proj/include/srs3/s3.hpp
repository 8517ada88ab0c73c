#pragma once

#include <Eigen/Core>

#include <cmath>
#include <numbers>

#include "srs3/errors.hpp"

// Quaternion model of the unit 3-sphere with its right-invariant
// orthonormal frame {E1, E2, T}.  T spans the vertical (Hopf) direction,
// E1 and E2 span the horizontal plane.  All functions are pure.

namespace srs3 {

using Vec4 = Eigen::Vector4d;

/// Point of S^3 stored as the quaternion x1 + i*y1 + j*x2 + k*y2.
using Point = Vec4;

inline constexpr double pi = std::numbers::pi;

/// Identity quaternion (1,0,0,0); the south pole of the sphere family.
inline Point identity_point() { return Point(1.0, 0.0, 0.0, 0.0); }

/// Raw quaternion product, no renormalization.  Use quat_mul for points.
inline Vec4 qmul(const Vec4& a, const Vec4& b) {
  return Vec4(a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
              a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
              a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
              a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]);
}

inline Vec4 qconj(const Vec4& a) { return Vec4(a[0], -a[1], -a[2], -a[3]); }

/// Quaternion product of two unit points, renormalized so that long
/// composition chains cannot drift off the sphere.
inline Point quat_mul(const Point& p, const Point& q) {
  return qmul(p, q).normalized();
}

/// Riemannian distance, arccos of the scalar product clamped to [-1,1].
inline double dist(const Point& p, const Point& q) {
  return std::acos(std::clamp(p.dot(q), -1.0, 1.0));
}

/// Distance to the vertical axis {z2 = 0}: arccos |z1|, in [0, pi/2].
inline double dist_to_axis(const Point& p) {
  const double r1 = std::hypot(p[0], p[1]);
  return std::acos(std::clamp(r1, -1.0, 1.0));
}

/// Tangent vector of S^3 attached to a base point.
struct TangentVector {
  Point base;
  Vec4 v;

  double norm() const { return v.norm(); }
};

/// Coefficients of a tangent vector in the frame {E1, E2, T}.
struct FrameCoords {
  double a;  // along E1
  double b;  // along E2
  double c;  // along T (vertical component)
};

/// Right-invariant orthonormal frame at a point: E1 = j*p, E2 = k*p, T = i*p.
struct Frame {
  Point base;
  Vec4 e1;
  Vec4 e2;
  Vec4 t;
};

inline Vec4 vertical_dir(const Point& p) {  // T(p) = i*p
  return Vec4(-p[1], p[0], -p[3], p[2]);
}

inline Frame frame(const Point& p) {
  Frame f;
  f.base = p;
  f.e1 = Vec4(-p[2], p[3], p[0], -p[1]);  // j*p
  f.e2 = Vec4(-p[3], -p[2], p[1], p[0]);  // k*p
  f.t = vertical_dir(p);
  return f;
}

inline FrameCoords frame_coords(const TangentVector& w) {
  const Frame f = frame(w.base);
  return FrameCoords{w.v.dot(f.e1), w.v.dot(f.e2), w.v.dot(f.t)};
}

inline TangentVector tangent_from_frame(const Point& p, const FrameCoords& c) {
  const Frame f = frame(p);
  return TangentVector{p, c.a * f.e1 + c.b * f.e2 + c.c * f.t};
}

/// 90 degree rotation J(v) = i*v of a horizontal tangent vector.
/// Throws HorizontalityViolation when the T-component exceeds 1e-10
/// relative to the vector norm.
inline TangentVector rot90(const TangentVector& w) {
  const double c = w.v.dot(vertical_dir(w.base));
  if (std::abs(c) > 1e-10 * std::max(1.0, w.norm()))
    throw HorizontalityViolation("rot90: vector has a vertical component");
  return TangentVector{w.base, qmul(Vec4(0, 1, 0, 0), w.v)};
}

/// Rotation about the vertical axis: (z1, z2) -> (z1, exp(i*theta) z2).
/// Linear isometry of R^4; applies to points and tangent vectors alike.
inline Vec4 rotate_vec(double theta, const Vec4& v) {
  const double c = std::cos(theta), s = std::sin(theta);
  return Vec4(v[0], v[1], c * v[2] - s * v[3], s * v[2] + c * v[3]);
}

inline Point rotate(double theta, const Point& p) { return rotate_vec(theta, p); }

/// Vertical translation exp(i*t)*p along the Hopf fibers (linear in p).
inline Vec4 vertical_translate_vec(double t, const Vec4& v) {
  const double c = std::cos(t), s = std::sin(t);
  return Vec4(c * v[0] - s * v[1], s * v[0] + c * v[1],
              c * v[2] - s * v[3], s * v[2] + c * v[3]);
}

inline Point vertical_translate(double t, const Point& p) {
  return vertical_translate_vec(t, p);
}

/// Hopf fibration p -> conj(p)*i*p, landing on S^3 cap {x1 = 0}.
inline Point hopf(const Point& p) {
  return qmul(qconj(p), qmul(Vec4(0, 1, 0, 0), p)).normalized();
}

/// Canonical representative of an angle in [0, 2*pi).
inline double wrap_2pi(double x) {
  double y = std::fmod(x, 2.0 * pi);
  if (y < 0.0) y += 2.0 * pi;
  if (y == 2.0 * pi) y = 0.0;
  return y;
}

/// Cylindrical coordinates p = (cos(omega) e^{i tau}, sin(omega) e^{i theta}).
/// omega equals dist_to_axis(p).  theta is canonicalized to 0 on the axis
/// (omega = 0), tau to 0 on the opposite circle (omega = pi/2).
struct Cylindrical {
  double omega;  // in [0, pi/2]
  double tau;    // mod 2*pi
  double theta;  // mod 2*pi
};

inline Cylindrical cylindrical(const Point& p) {
  Cylindrical c;
  c.omega = dist_to_axis(p);
  const double r1 = std::hypot(p[0], p[1]);
  const double r2 = std::hypot(p[2], p[3]);
  c.tau = (r1 > 0.0) ? wrap_2pi(std::atan2(p[1], p[0])) : 0.0;
  c.theta = (r2 > 0.0) ? wrap_2pi(std::atan2(p[3], p[2])) : 0.0;
  return c;
}

inline Point from_cylindrical(double omega, double tau, double theta) {
  const double co = std::cos(omega), so = std::sin(omega);
  return Point(co * std::cos(tau), co * std::sin(tau),
               so * std::cos(theta), so * std::sin(theta));
}

inline Point from_cylindrical(const Cylindrical& c) {
  return from_cylindrical(c.omega, c.tau, c.theta);
}

}  // namespace srs3
