#pragma once

#include <vector>

namespace srs3 {

/// C^2 periodic cubic spline interpolating values on uniform knots over
/// [0, period).  Evaluation wraps; derivative and running integral are
/// available in closed form per segment.
class PeriodicCubicSpline {
 public:
  PeriodicCubicSpline() = default;
  PeriodicCubicSpline(std::vector<double> values, double period);

  double operator()(double x) const;
  double deriv(double x) const;
  double deriv2(double x) const;

  /// Integral from 0 to x (x may exceed the period; periodic extension).
  double integral(double x) const;

  /// Integral over one full period (equals knot spacing times value sum).
  double period_integral() const;

  int size() const { return static_cast<int>(y_.size()); }
  const std::vector<double>& values() const { return y_; }
  double period() const { return period_; }

 private:
  struct Local {
    int i;       // segment index
    double xi;   // offset within the segment
  };
  Local locate(double x) const;

  std::vector<double> y_;       // knot values
  std::vector<double> m_;       // knot second derivatives
  std::vector<double> prefix_;  // integral from 0 to knot i
  double period_ = 0.0;
  double h_ = 0.0;
};

}  // namespace srs3
