#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "hypants/moebius.hpp"

namespace hypants {

/// Images of the two pants generators. The third peripheral element is c1·c2.
struct PantsRepresentation {
  Mobius c1;
  Mobius c2;

  Mobius c3() const { return c1 * c2; }
};

enum class PantsKind {
  reducible,   ///< c1, c2 share their fixed point: translations z + z1, z + z2
  rigid,       ///< conjugate to c1 = [[1,2],[0,1]], c2 = [[1,0],[-2,1]]
  degenerate,  ///< a generator is trivial (the z = 0 branch)
};
std::string_view to_string(PantsKind kind);

struct PantsNormalForm {
  PantsKind kind;
  /// g with g·rep·g^-1 equal to the named normal form (canonical sign).
  Mobius conjugator;
  /// Translation lengths (z1, z2) after conjugation; absent for rigid.
  std::optional<std::pair<Complex, Complex>> params;
};

/// c1 = [[1,2],[0,1]], c2 = [[1,0],[-2,1]].
PantsRepresentation rigid_representation();

/// c_i = [[1, z_i],[0, 1]].
PantsRepresentation reducible_representation(Complex z1, Complex z2);

/// Reduce a peripheral-parabolic representation to one of the two normal
/// forms. Throws std::invalid_argument if c1, c2 or c1·c2 is elliptic or
/// loxodromic, or if the rigid reduction does not land on the rigid form.
PantsNormalForm classify_pants_rep(const PantsRepresentation& rep,
                                   double eps = kDefaultEpsilon);

/// trace(c1 · [[1,0],[z,1]]) with c1 = [[1,2],[0,1]]; equals 2 + 2z.
Complex lower_unipotent_product_trace(Complex z);

/// Solutions of 2 + 2z = ±2, i.e. the z for which the product is parabolic.
std::pair<Complex, Complex> parabolic_product_roots();

/// [[1/a - a, a], [-a, a]]: the element sending 0 -> 1 -> ∞.
Mobius q_matrix(Complex a);

/// Recover a from a transform with M(0) = 1 and M(1) = ∞. The PSL sign
/// ambiguity a ~ -a is resolved by taking arg a in (-pi/2, pi/2].
/// Throws std::invalid_argument("boundary condition failed") otherwise.
Complex extract_q_param(const Mobius& m, double eps = kDefaultEpsilon);

/// Sign representative of a with argument in (-pi/2, pi/2].
Complex canonical_sign(Complex a);

}  // namespace hypants
