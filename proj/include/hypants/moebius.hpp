#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "hypants/complex_value.hpp"

namespace hypants {

/// An element of PSL(2,C), stored as an SL(2,C) lift.
///
/// The constructor rescales by sqrt(det) so that det = 1. The stored lift keeps
/// the sign it was built with (so traces of products are the SL traces); PSL
/// comparisons go through canonical() or psl_distance().
class Mobius {
 public:
  Mobius(Complex a11, Complex a12, Complex a21, Complex a22);

  static Mobius identity() { return {1.0, 0.0, 0.0, 1.0}; }
  /// z -> z + t
  static Mobius translation(Complex t) { return {1.0, t, 0.0, 1.0}; }
  /// z -> k z
  static Mobius dilation(Complex k);

  Complex a11() const { return m_[0]; }
  Complex a12() const { return m_[1]; }
  Complex a21() const { return m_[2]; }
  Complex a22() const { return m_[3]; }
  const std::array<Complex, 4>& entries() const { return m_; }

  Complex det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  Complex trace() const { return m_[0] + m_[3]; }
  double max_entry_norm() const;

  Mobius inverse() const;
  Mobius negated() const;

  /// Sign representative whose first nonzero entry (row-major) has argument in
  /// (-pi/2, pi/2].
  Mobius canonical() const;

  bool fixes_infinity(double eps = kDefaultEpsilon) const;

 private:
  struct Raw {};
  Mobius(Raw, const std::array<Complex, 4>& m) : m_(m) {}
  friend Mobius compose(const Mobius& f, const Mobius& g);

  std::array<Complex, 4> m_;
};

/// f ∘ g as the SL(2,C) product f·g, renormalized to det 1.
Mobius compose(const Mobius& f, const Mobius& g);
inline Mobius operator*(const Mobius& f, const Mobius& g) { return compose(f, g); }

/// g f g^-1
inline Mobius conjugate(const Mobius& g, const Mobius& f) {
  return g * f * g.inverse();
}

/// min over the sign of max_ij |f_ij ∓ g_ij|.
double psl_distance(const Mobius& f, const Mobius& g);

/// PSL equality relative to max(1, largest entry).
bool approx_equal(const Mobius& f, const Mobius& g, double eps = kDefaultEpsilon);

/// Residual of f against the identity in PSL, max entry norm.
double identity_residual(const Mobius& f);

enum class IsometryKind { identity, parabolic, elliptic, loxodromic };
std::string_view to_string(IsometryKind kind);

struct IsometryClass {
  IsometryKind kind;
  Complex trace;
};

/// Identity is detected first, then |tr ∓ 2| <= eps·max(1,|tr|) means parabolic.
IsometryClass classify(const Mobius& f, double eps = kDefaultEpsilon);

/// Roots of a21 z^2 + (a22 - a11) z - a12 = 0 on C ∪ {∞}.
/// Parabolic elements return exactly one point. Throws on the identity.
std::vector<ComplexValue> fixed_points(const Mobius& f, double eps = kDefaultEpsilon);

/// (a11 z + a12) / (a21 z + a22), projectively.
ComplexValue apply_boundary(const Mobius& f, const ComplexValue& z);

/// The Möbius map sending (p, q, r) to (∞, 0, 1). Points must be distinct.
Mobius map_to_infinity_zero_one(const ComplexValue& p, const ComplexValue& q,
                                const ComplexValue& r);

}  // namespace hypants
