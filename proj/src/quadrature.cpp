#include "srs3/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <map>
#include <stdexcept>

namespace srs3 {

namespace {

template <unsigned N>
GaussRule expand_rule() {
  using rule = boost::math::quadrature::gauss<double, N>;
  GaussRule g;
  const auto& xs = rule::abscissa();  // non-negative half of the nodes
  const auto& ws = rule::weights();
  for (std::size_t i = xs.size(); i-- > 0;) {
    if (xs[i] > 0.0) {
      g.x.push_back(-xs[i]);
      g.w.push_back(ws[i]);
    }
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] == 0.0 && N % 2 == 0) continue;
    g.x.push_back(xs[i]);
    g.w.push_back(ws[i]);
  }
  return g;
}

double composite_1d(const std::function<double(double)>& f, double a, double b,
                    const GaussRule& g, int panels) {
  const double hp = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * hp;
    double acc = 0.0;
    for (std::size_t i = 0; i < g.x.size(); ++i)
      acc += g.w[i] * f(mid + 0.5 * hp * g.x[i]);
    total += acc * 0.5 * hp;
  }
  return total;
}

double composite_2d(const std::function<double(double, double)>& f, double u0,
                    double u1, double v0, double v1, const GaussRule& g,
                    int panels) {
  const double hu = (u1 - u0) / panels;
  const double hv = (v1 - v0) / panels;
  double total = 0.0;
  for (int pu = 0; pu < panels; ++pu) {
    const double mu = u0 + (pu + 0.5) * hu;
    for (int pv = 0; pv < panels; ++pv) {
      const double mv = v0 + (pv + 0.5) * hv;
      double acc = 0.0;
      for (std::size_t i = 0; i < g.x.size(); ++i) {
        const double u = mu + 0.5 * hu * g.x[i];
        double row = 0.0;
        for (std::size_t j = 0; j < g.x.size(); ++j)
          row += g.w[j] * f(u, mv + 0.5 * hv * g.x[j]);
        acc += g.w[i] * row;
      }
      total += acc * 0.25 * hu * hv;
    }
  }
  return total;
}

template <typename Pass>
QuadResult refine(Pass pass, const QuadratureSpec& spec) {
  QuadResult r;
  int panels = std::max(1, spec.panels);
  r.value = pass(panels);
  if (!spec.adaptive) return r;
  for (int level = 1; level <= spec.max_levels; ++level) {
    panels *= 2;
    const double next = pass(panels);
    r.error = std::abs(next - r.value);
    r.value = next;
    r.levels = level;
    if (r.error <= spec.tol) return r;
  }
  throw NoConvergence("quadrature: refinement limit reached, delta " +
                      std::to_string(r.error));
}

}  // namespace

const GaussRule& gauss_rule(int n) {
  static const std::map<int, GaussRule> rules = {
      {8, expand_rule<8>()},
      {16, expand_rule<16>()},
      {32, expand_rule<32>()},
      {64, expand_rule<64>()},
      {128, expand_rule<128>()},
  };
  const auto it = rules.find(n);
  if (it == rules.end())
    throw std::invalid_argument("gauss_rule: unsupported order " +
                                std::to_string(n));
  return it->second;
}

QuadResult integrate_1d(const std::function<double(double)>& f, double a,
                        double b, const QuadratureSpec& spec) {
  const GaussRule& g = gauss_rule(spec.points);
  return refine([&](int panels) { return composite_1d(f, a, b, g, panels); },
                spec);
}

QuadResult integrate_2d(const std::function<double(double, double)>& f,
                        double u0, double u1, double v0, double v1,
                        const QuadratureSpec& spec) {
  const GaussRule& g = gauss_rule(spec.points);
  return refine(
      [&](int panels) { return composite_2d(f, u0, u1, v0, v1, g, panels); },
      spec);
}

}  // namespace srs3
