#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "hypants/moebius.hpp"

namespace hypants {

/// Seeded sampler with platform-independent output: only the raw
/// mt19937_64 stream is used, never the implementation-defined distributions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(engine_() >> 11) * 0x1.0p-53);
  }

  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Complex in_box(double half_width) {
    const double re = uniform(-half_width, half_width);
    return {re, uniform(-half_width, half_width)};
  }

  /// Log-uniform radius in [r_min, r_max], uniform angle.
  Complex in_annulus(double r_min, double r_max) {
    const double r = std::exp(uniform(std::log(r_min), std::log(r_max)));
    return std::polar(r, uniform(-3.14159265358979323846, 3.14159265358979323846));
  }

  /// Entries uniform in [-2,2]^2 with |det| >= 1/4 before normalization.
  Mobius mobius() {
    for (;;) {
      const Complex a = in_box(2.0), b = in_box(2.0), c = in_box(2.0), d = in_box(2.0);
      if (std::abs(a * d - b * c) >= 0.25) return {a, b, c, d};
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hypants
