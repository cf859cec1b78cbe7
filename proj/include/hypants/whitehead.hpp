#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "hypants/claim_report.hpp"
#include "hypants/moebius.hpp"

namespace hypants {

/// The representation of the Whitehead link group determined by a nonzero a:
/// c1 = [[1,2],[0,1]], c2 = [[1,0],[-2,1]], q = [[1/a - a, a],[-a, a]].
struct WhiteheadRep {
  Complex a;
  Mobius c1;
  Mobius c2;
  Mobius q;

  /// [[a^-2 - 2, 1], [-1, 0]]
  Mobius q_squared_closed_form() const;
};

/// Throws std::invalid_argument when |a| <= eps.
WhiteheadRep build_rho(Complex a, double eps = kDefaultEpsilon);

struct RelationResiduals {
  double r1 = 0.0;         ///< c1 q^2 vs q^2 c2, PSL max-entry distance
  double r2 = 0.0;         ///< [q^-1 c1 q, c1 c2] vs identity
  double q_squared = 0.0;  ///< q·q vs the closed form
  double max() const;
};

RelationResiduals relation_residuals(const WhiteheadRep& rho);

/// Residuals for many parameters. OpenMP-parallel; results in input order.
std::vector<RelationResiduals> relation_scan(std::span<const Complex> params);
/// Single-threaded reference for relation_scan.
std::vector<RelationResiduals> relation_scan_serial(std::span<const Complex> params);

/// Evaluate a word such as "q^-1 c1 q c1 c2" (whitespace or '*' separated;
/// letters c1, c2, q, each optionally followed by ^-1).
Mobius evaluate_word(const WhiteheadRep& rho, std::string_view word);

/// Lobachevsky function -∫_0^θ log|2 sin t| dt, absolute error below 1e-10.
double lobachevsky(double theta);

/// Shape parameter of an ideal tetrahedron; 0 and ±1 are rejected.
class TetShape {
 public:
  explicit TetShape(Complex x, double eps = kDefaultEpsilon);

  Complex x() const { return x_; }
  /// -1/x, the shape of the second pair of tetrahedra.
  Complex companion() const { return -1.0 / x_; }
  /// Real shapes span no volume.
  bool flat() const { return flat_; }

 private:
  Complex x_;
  bool flat_;
};

/// Λ(arg x) + Λ(arg 1/(1-x)) + Λ(arg(1 - 1/x)); 0 for flat shapes.
double tet_volume(const TetShape& shape);

/// 2·vol(x) + 2·vol(-1/x).
double whitehead_volume(const TetShape& shape);

struct NRParameter {
  Complex x;
  Complex z;  ///< x - 1/x
  bool degenerate;  ///< x ∈ {±1}, i.e. z = 0
};

/// Throws std::invalid_argument for x = 0.
NRParameter nr_parameter(Complex x, double eps = kDefaultEpsilon);

inline constexpr double kClosedManifoldVolumeLowerBound = 2.0298;

/// A subgroup of index k in a group whose quotient has volume V gives a
/// quotient of volume V/k; for k >= 2 this must drop below the closed/cusped
/// volume lower bound to rule the index out.
ClaimReport index_volume_check(double volume, int index = 2,
                               double lower_bound = kClosedManifoldVolumeLowerBound);
/// Uses whitehead_volume(i).
ClaimReport index_volume_check();

}  // namespace hypants
