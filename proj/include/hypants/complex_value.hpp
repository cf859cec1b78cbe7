#pragma once

#include <algorithm>
#include <complex>
#include <string>

namespace hypants {

using Complex = std::complex<double>;

/// Default equality tolerance. Comparisons are relative to max(1, magnitude).
inline constexpr double kDefaultEpsilon = 1e-9;

inline double scaled_tolerance(double eps, double magnitude) {
  return eps * std::max(1.0, magnitude);
}

/// A point of the Riemann sphere C ∪ {∞}, the boundary of upper half-space.
///
/// Infinity is a tag, never a large float. Finite values must have finite
/// real and imaginary parts.
class ComplexValue {
 public:
  ComplexValue() = default;
  ComplexValue(Complex z);  // NOLINT: implicit on purpose, C embeds in C ∪ {∞}
  ComplexValue(double re, double im = 0.0) : ComplexValue(Complex(re, im)) {}

  static ComplexValue infinity();

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// Throws std::domain_error for ∞.
  Complex value() const;
  double re() const { return value().real(); }
  double im() const { return value().imag(); }

  /// Exact for ∞; |z - w| <= eps * max(1, |z|, |w|) for finite values.
  bool approx_equal(const ComplexValue& other,
                    double eps = kDefaultEpsilon) const;

  friend bool operator==(const ComplexValue& lhs, const ComplexValue& rhs) {
    if (lhs.infinite_ || rhs.infinite_) return lhs.infinite_ == rhs.infinite_;
    return lhs.z_ == rhs.z_;
  }

  std::string to_string() const;

 private:
  bool infinite_ = false;
  Complex z_{};
};

}  // namespace hypants
