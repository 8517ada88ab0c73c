#include "srs3/surfaces.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace srs3 {

namespace {

constexpr double singular_threshold = 1e-8;

Vec4 fd_partial(const std::function<Point(double, double)>& eval, double u,
                double v, double h, bool along_u) {
  const Point plus = along_u ? eval(u + h, v) : eval(u, v + h);
  const Point minus = along_u ? eval(u - h, v) : eval(u, v - h);
  return (plus - minus) / (2.0 * h);
}

}  // namespace

Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c) {
  auto minor = [&](int i, int j, int k) {
    Eigen::Matrix3d m;
    m << a[i], a[j], a[k], b[i], b[j], b[k], c[i], c[j], c[k];
    return m.determinant();
  };
  return Vec4(-minor(1, 2, 3), minor(0, 2, 3), -minor(0, 1, 3),
              minor(0, 1, 2));
}

std::pair<Vec4, Vec4> partials(const ParamSurface& S, double u, double v) {
  Vec4 fu = S.du ? S.du(u, v) : fd_partial(S.eval, u, v, S.fd_step, true);
  Vec4 fv = S.dv ? S.dv(u, v) : fd_partial(S.eval, u, v, S.fd_step, false);
  const Point p = S.eval(u, v);
  fu -= fu.dot(p) * p;  // tangent-space hygiene
  fv -= fv.dot(p) * p;
  return {fu, fv};
}

TangentVector unit_normal(const ParamSurface& S, double u, double v) {
  const Point p = S.eval(u, v);
  const auto [fu, fv] = partials(S, u, v);
  const Vec4 w = cross4(p, fu, fv);
  const double scale = fu.norm() * fv.norm();
  if (w.norm() <= 1e-12 * std::max(1.0, scale))
    throw DegenerateParametrization("unit_normal: Jacobian rank below 2");
  return TangentVector{p, w.normalized()};
}

double horizontal_norm(const ParamSurface& S, double u, double v) {
  const TangentVector n = unit_normal(S, u, v);
  const double c = n.v.dot(vertical_dir(n.base));
  return std::sqrt(std::max(0.0, 1.0 - c * c));
}

HorizontalGauss horizontal_gauss(const ParamSurface& S, double u, double v) {
  const TangentVector n = unit_normal(S, u, v);
  const Vec4 t = vertical_dir(n.base);
  const Vec4 nh = n.v - n.v.dot(t) * t;
  const double norm_nh = nh.norm();
  if (norm_nh < singular_threshold)
    throw SingularPoint("horizontal_gauss: |N_h| below singular threshold");
  return HorizontalGauss{TangentVector{n.base, nh / norm_nh}, norm_nh};
}

TangentVector characteristic_field(const ParamSurface& S, double u, double v) {
  return rot90(horizontal_gauss(S, u, v).nu_h);
}

QuadResult sr_area(const ParamSurface& S, const QuadratureSpec& spec) {
  auto integrand = [&S](double u, double v) {
    const Point p = S.eval(u, v);
    const auto [fu, fv] = partials(S, u, v);
    const Vec4 w = cross4(p, fu, fv);  // |w| is the Riemannian area element
    const Vec4 t = vertical_dir(p);
    return (w - w.dot(t) * t).norm();
  };
  return integrate_2d(integrand, S.u0, S.u1, S.v0, S.v1, spec);
}

QuadResult riemannian_area(const ParamSurface& S, const QuadratureSpec& spec) {
  auto integrand = [&S](double u, double v) {
    const Point p = S.eval(u, v);
    const auto [fu, fv] = partials(S, u, v);
    return cross4(p, fu, fv).norm();
  };
  return integrate_2d(integrand, S.u0, S.u1, S.v0, S.v1, spec);
}

double mean_curvature_check(const ParamSurface& S, double u, double v,
                            double h) {
  if (!(h >= 1e-6 && h <= 1e-3))
    throw DomainExceeded("mean_curvature_check: h outside [1e-6, 1e-3]");
  const auto [fu, fv] = partials(S, u, v);

  // Orthonormal tangent basis from the parametrization.
  const Vec4 e1 = fu.normalized();
  Vec4 e2 = fv - fv.dot(e1) * e1;
  const double e2n = e2.norm();
  if (e2n <= 1e-12 * std::max(1.0, fv.norm()))
    throw DegenerateParametrization("mean_curvature_check: rank-1 Jacobian");
  e2 /= e2n;

  // Parameter displacement solving  [fu fv] * c = h * e  in least squares.
  Eigen::Matrix2d gram;
  gram << fu.dot(fu), fu.dot(fv), fv.dot(fu), fv.dot(fv);
  const Eigen::Matrix2d gram_inv = gram.inverse();
  auto param_step = [&](const Vec4& e) {
    const Eigen::Vector2d rhs(fu.dot(e), fv.dot(e));
    return Eigen::Vector2d(gram_inv * rhs);
  };

  double divergence = 0.0;
  for (const Vec4& e : {e1, e2}) {
    const Eigen::Vector2d c = h * param_step(e);
    const Vec4 plus = horizontal_gauss(S, u + c[0], v + c[1]).nu_h.v;
    const Vec4 minus = horizontal_gauss(S, u - c[0], v - c[1]).nu_h.v;
    divergence += (plus - minus).dot(e) / (2.0 * h);
  }
  return divergence;
}

QuadResult volume_revolution(const RevolutionRegion& region,
                             const QuadratureSpec& spec) {
  auto integrand = [&region](double omega) {
    const auto [lo, hi] = region.tau_bounds(omega);
    return (hi - lo) * std::cos(omega) * std::sin(omega);
  };
  QuadResult r = integrate_1d(integrand, region.omega0, region.omega1, spec);
  r.value *= 2.0 * pi;
  r.error *= 2.0 * pi;
  return r;
}

double volume_revolution_indicator(
    const std::function<bool(double, double)>& contains, int cells) {
  const double domega = 0.5 * pi / cells;
  const double dtau = 2.0 * pi / cells;
  double total = 0.0;
  for (int i = 0; i < cells; ++i) {
    const double omega = (i + 0.5) * domega;
    const double weight = std::cos(omega) * std::sin(omega);
    int inside = 0;
    for (int j = 0; j < cells; ++j)
      if (contains(omega, (j + 0.5) * dtau)) ++inside;
    total += weight * inside;
  }
  return 2.0 * pi * total * domega * dtau;
}

ParamSurface clifford_torus(double rho) {
  const double r2 = std::sqrt(1.0 - rho * rho);
  ParamSurface S;
  S.eval = [rho, r2](double tau, double theta) {
    return Point(rho * std::cos(tau), rho * std::sin(tau),
                 r2 * std::cos(theta), r2 * std::sin(theta));
  };
  S.du = [rho](double tau, double) {
    return Vec4(-rho * std::sin(tau), rho * std::cos(tau), 0.0, 0.0);
  };
  S.dv = [r2](double, double theta) {
    return Vec4(0.0, 0.0, -r2 * std::sin(theta), r2 * std::cos(theta));
  };
  S.u0 = 0.0;
  S.u1 = 2.0 * pi;
  S.v0 = 0.0;
  S.v1 = 2.0 * pi;
  return S;
}

}  // namespace srs3
