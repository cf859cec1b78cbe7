#pragma once

#include "hypants/moebius.hpp"

namespace hypants {

/// A horoball in upper half-space.
///
/// For a finite center, size is the Euclidean diameter. For center ∞, size is
/// the height of the bounding horizontal plane.
class Horoball {
 public:
  Horoball(ComplexValue center, double size);

  static Horoball at_infinity(double height) { return {ComplexValue::infinity(), height}; }

  const ComplexValue& center() const { return center_; }
  double size() const { return size_; }
  bool at_infinity() const { return center_.is_infinite(); }

 private:
  ComplexValue center_;
  double size_;
};

/// Image of a horoball. A finite ball at c of diameter d goes to f(c) with
/// diameter d / |a21 c + a22|^2; the plane at height h goes to the ball at
/// a11/a21 of diameter 1 / (|a21|^2 h) when a21 != 0.
Horoball apply_to_horoball(const Mobius& f, const Horoball& ball);

/// Signed separation: |c - c'|^2 - d d' for two finite balls, h - d against a
/// plane at height h. Nonnegative iff disjoint or tangent. Two balls at ∞ are
/// nested and report -min(h, h').
double horoball_gap(const Horoball& lhs, const Horoball& rhs);
bool horoballs_disjoint(const Horoball& lhs, const Horoball& rhs, double eps = kDefaultEpsilon);
bool horoballs_tangent(const Horoball& lhs, const Horoball& rhs, double eps = kDefaultEpsilon);

/// Translation lattice of a rank-2 parabolic stabilizer of ∞.
class CuspLattice {
 public:
  /// Throws std::invalid_argument if t1, t2 are linearly dependent over R.
  CuspLattice(Complex t1, Complex t2);

  Complex t1() const { return t1_; }
  Complex t2() const { return t2_; }
  /// |Im(conj(t1) t2)|
  double area() const;
  /// Longer diagonal of the fundamental parallelogram.
  double diameter() const;

  /// Real coordinates (u, v) with z = u t1 + v t2.
  std::pair<double, double> coordinates(Complex z) const;
  /// Representative of z mod the lattice with coordinates in [0, 1); values
  /// within tol of 1 wrap to 0.
  Complex reduce(Complex z, double tol = kDefaultEpsilon) const;

 private:
  Complex t1_;
  Complex t2_;
};

/// A closed Euclidean geodesic on the cusp torus with slope p t1 + q t2.
struct Horocycle {
  int p = 0;
  int q = 0;
  double length = 0.0;

  bool primitive() const;
};

/// Slope (p, q) measured on the cusp cross-section at height h.
Horocycle make_horocycle(const CuspLattice& lattice, int p, int q, double height = 1.0);

}  // namespace hypants
