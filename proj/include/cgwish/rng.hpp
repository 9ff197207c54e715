#pragma once

#include <cmath>
#include <cstdint>

#include "cgwish/errors.hpp"

namespace cgwish {

// Self-contained generator so that seeded runs are bit-reproducible across
// standard-library implementations (std::normal_distribution is not).
// Core generator is xoshiro256++ seeded through splitmix64.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    for (auto& si : s_) si = splitmix64(x);
    // warm up past any low-entropy seed state
    for (int i = 0; i < 8; ++i) next();
  }

  /// Independent child stream; deterministic function of (parent state, key).
  RngStream split(std::uint64_t key) const {
    return RngStream(s_[0] ^ (s_[2] * 0xd1342543de82ef95ULL), key);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// uniform on (0,1); never returns exactly 0 or 1
  double uniform() {
    // 53 random bits, then nudge away from 0
    double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return u > 0.0 ? u : 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// standard normal via Box-Muller (deterministic, no cached spare)
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  /// Gamma(shape, scale=1), Marsaglia-Tsang; shape < 1 handled by boosting
  double gamma(double shape) {
    if (!(shape > 0.0)) throw InvalidParamsError("gamma: shape must be positive");
    if (shape < 1.0) {
      double u = uniform();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  /// Inverse gamma with density proportional to x^{-(shape+1)} e^{-scale/x};
  /// mean scale/(shape-1) for shape > 1.
  double invgamma(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0))
      throw InvalidParamsError("invgamma: shape and scale must be positive");
    return scale / gamma(shape);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t s_[4];
};

}  // namespace cgwish
