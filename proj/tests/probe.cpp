// Scratch numeric probe used during development; not part of the suite.
#include <cstdio>

#include "srs3/calibration.hpp"
#include "srs3/pansu.hpp"
#include "srs3/surfaces.hpp"

using namespace srs3;

int main() {
  for (double lambda : {0.0, 1.0}) {
    for (Side side : {Side::plus, Side::minus}) {
      const FoliationSide f{lambda, side};
      const ParamSurface leaf = leaf_surface(f, 0.7);
      const double omega = 0.6 * sphere_omega_max(lambda);
      const double theta = 1.9;
      const Point p = leaf.eval(omega, theta);
      const TangentVector x = calibration_field(f, p);
      const HorizontalGauss g = horizontal_gauss(leaf, omega, theta);
      std::printf("lambda=%g side=%s  <X, nu_h(leaf)> = %+.12f\n", lambda,
                  side == Side::plus ? "plus " : "minus",
                  x.v.dot(g.nu_h.v));
    }
  }
  return 0;
}
