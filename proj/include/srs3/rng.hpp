#pragma once

#include <cstdint>

#include "srs3/s3.hpp"

namespace srs3 {

/// Counter-based generator: draw i is a pure function of (seed, i), so
/// streams are reproducible across platforms and replayable in parallel.
/// Mixing function: splitmix64.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(mix(seed ^ salt)) {}

  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t next_u64() { return mix(seed_ + counter_++); }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

 private:
  static constexpr std::uint64_t salt = 0x9d2c5680d3a3a9ebULL;
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// Uniform random point of S^3 (Gaussian 4-vector, normalized).
inline Point random_point(CounterRng& rng) {
  // Box-Muller pairs from uniforms.
  auto gauss_pair = [&rng](double& g1, double& g2) {
    const double u1 = std::max(rng.uniform(), 1e-300);
    const double u2 = rng.uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    g1 = r * std::cos(2.0 * pi * u2);
    g2 = r * std::sin(2.0 * pi * u2);
  };
  Vec4 v;
  gauss_pair(v[0], v[1]);
  gauss_pair(v[2], v[3]);
  while (v.norm() < 1e-12) {
    gauss_pair(v[0], v[1]);
    gauss_pair(v[2], v[3]);
  }
  return Point(v.normalized());
}

/// Uniform random unit horizontal tangent vector at p.
inline TangentVector random_horizontal(CounterRng& rng, const Point& p) {
  const double a = rng.uniform(0.0, 2.0 * pi);
  const Frame f = frame(p);
  return TangentVector{p, std::cos(a) * f.e1 + std::sin(a) * f.e2};
}

}  // namespace srs3
