#pragma once

#include <functional>
#include <vector>

#include "srs3/errors.hpp"

namespace srs3 {

/// Accuracy controls for the composite Gauss-Legendre rules.  Refinement
/// doubles the panel count per axis and stops when the last delta falls
/// below tol; the delta doubles as the reported error estimate.
struct QuadratureSpec {
  int points = 64;       // Gauss-Legendre nodes per axis and panel
  int panels = 1;        // starting panels per axis
  int max_levels = 4;    // panel-doubling rounds after the first pass
  double tol = 1e-8;     // absolute tolerance on the refinement delta
  bool adaptive = true;  // false: single pass at `panels`, no convergence check
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // |last refinement delta|, 0 for non-adaptive passes
  int levels = 0;      // refinement rounds actually carried out
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1,1].
/// Supported orders: 8, 16, 32, 64, 128.
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

const GaussRule& gauss_rule(int n);

/// Composite integral over [a,b].  Throws NoConvergence when the
/// refinement limit is reached before the tolerance.
QuadResult integrate_1d(const std::function<double(double)>& f, double a,
                        double b, const QuadratureSpec& spec = {});

/// Tensor-product integral over [u0,u1] x [v0,v1].
QuadResult integrate_2d(const std::function<double(double, double)>& f,
                        double u0, double u1, double v0, double v1,
                        const QuadratureSpec& spec = {});

}  // namespace srs3
