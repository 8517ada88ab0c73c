#include "srs3/spline.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace srs3 {

PeriodicCubicSpline::PeriodicCubicSpline(std::vector<double> values,
                                         double period)
    : y_(std::move(values)), period_(period) {
  const int n = static_cast<int>(y_.size());
  if (n < 3) throw std::invalid_argument("PeriodicCubicSpline: need >= 3 knots");
  if (!(period > 0.0))
    throw std::invalid_argument("PeriodicCubicSpline: period must be positive");
  h_ = period_ / n;

  // Cyclic tridiagonal system for the knot second derivatives:
  //   M[i-1] + 4 M[i] + M[i+1] = 6 (y[i+1] - 2 y[i] + y[i-1]) / h^2.
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd b(n);
  for (int i = 0; i < n; ++i) {
    A(i, (i + n - 1) % n) += 1.0;
    A(i, i) += 4.0;
    A(i, (i + 1) % n) += 1.0;
    const double yp = y_[(i + 1) % n], ym = y_[(i + n - 1) % n];
    b(i) = 6.0 * (yp - 2.0 * y_[i] + ym) / (h_ * h_);
  }
  const Eigen::VectorXd m = A.partialPivLu().solve(b);
  m_.assign(m.data(), m.data() + n);

  // Running integral at the knots.
  prefix_.assign(n + 1, 0.0);
  for (int i = 0; i < n; ++i) {
    const double yi = y_[i], yj = y_[(i + 1) % n];
    const double mi = m_[i], mj = m_[(i + 1) % n];
    const double seg = 0.5 * h_ * (yi + yj) - h_ * h_ * h_ * (mi + mj) / 24.0;
    prefix_[i + 1] = prefix_[i] + seg;
  }
}

PeriodicCubicSpline::Local PeriodicCubicSpline::locate(double x) const {
  double t = std::fmod(x, period_);
  if (t < 0.0) t += period_;
  int i = static_cast<int>(t / h_);
  if (i >= size()) i = size() - 1;
  return Local{i, t - i * h_};
}

double PeriodicCubicSpline::operator()(double x) const {
  const auto [i, xi] = locate(x);
  const int j = (i + 1) % size();
  const double d = h_ - xi;
  return (m_[i] * d * d * d + m_[j] * xi * xi * xi) / (6.0 * h_) +
         (y_[i] / h_ - m_[i] * h_ / 6.0) * d +
         (y_[j] / h_ - m_[j] * h_ / 6.0) * xi;
}

double PeriodicCubicSpline::deriv(double x) const {
  const auto [i, xi] = locate(x);
  const int j = (i + 1) % size();
  const double d = h_ - xi;
  return (-m_[i] * d * d + m_[j] * xi * xi) / (2.0 * h_) +
         (y_[j] - y_[i]) / h_ - (m_[j] - m_[i]) * h_ / 6.0;
}

double PeriodicCubicSpline::deriv2(double x) const {
  const auto [i, xi] = locate(x);
  const int j = (i + 1) % size();
  return (m_[i] * (h_ - xi) + m_[j] * xi) / h_;
}

double PeriodicCubicSpline::integral(double x) const {
  const double whole = std::floor(x / period_);
  double t = x - whole * period_;
  const auto [i, xi] = locate(t);
  const int j = (i + 1) % size();
  const double h4 = h_ * h_ * h_ * h_;
  const double d = h_ - xi;
  const double part =
      (m_[i] * (h4 - d * d * d * d) / 4.0 + m_[j] * xi * xi * xi * xi / 4.0) /
          (6.0 * h_) +
      (y_[i] / h_ - m_[i] * h_ / 6.0) * (h_ * xi - 0.5 * xi * xi) +
      (y_[j] / h_ - m_[j] * h_ / 6.0) * 0.5 * xi * xi;
  return whole * period_integral() + prefix_[i] + part;
}

double PeriodicCubicSpline::period_integral() const { return prefix_[size()]; }

}  // namespace srs3
