#pragma once

#include <array>
#include <span>
#include <vector>

#include "hypants/claim_report.hpp"
#include "hypants/horoball.hpp"

namespace hypants {

/// |translation| / h; zero for a trivial translation. Throws for h <= 0.
double horocycle_length(Complex translation, double height);

/// Product of two horocycle lengths after each is expanded by `gap` toward
/// tangency: l1 l2 e^{2 gap}. Expanding one by d and shrinking the other by d
/// leaves it unchanged. Throws for nonpositive lengths.
double tangent_product(double l1, double l2, double gap);

/// Algebraic intersection number p1 q2 - p2 q1.
int intersection_number(const Horocycle& s1, const Horocycle& s2);

/// |Δ(s1, s2)| · area <= l(s1) l(s2) on the cusp torus at the given height,
/// with equality exactly for orthogonal slopes. Throws for non-primitive slopes.
ClaimReport intersection_area_bound(const Horocycle& s1, const Horocycle& s2,
                                    const CuspLattice& lattice, double height = 1.0);

/// Lowest |Im w| for w outside the disks |w - k a/2| < 1 and
/// |w - (k a/2 + a/4)| < a/4, k ∈ Z:
///   sqrt(1 - 4/a^2) for a >= 2 sqrt 2,  sqrt(1 - (a/4)^2) for a <= 2 sqrt 2.
/// Throws std::invalid_argument for a outside (0, 4].
double straddle_min_height(double a);

/// The same quantity by direct minimization of the upper envelope of the disk
/// family over one period (dense sampling, then golden-section refinement).
double straddle_min_height_numeric(double a);

/// straddle_min_height_numeric over many a. OpenMP-parallel, input order.
std::vector<double> straddle_scan(std::span<const double> as);
std::vector<double> straddle_scan_serial(std::span<const double> as);

/// F(t) = (pi - 1) t^2 - linear t + 3 pi / 2, the seen-area inequality
/// pi/2 + 4 pi (t/2 - 1/2)^2 <= t^2 moved to one side (t = sqrt(ab)).
double seen_area_slack(double t, double linear = 2.0 * 3.14159265358979323846);

/// Checks F(t) > 0 for every t > 0 by completing the square, cross-checked by
/// a grid + golden-section minimization on (0, 10]. `linear` perturbs the 2 pi
/// coefficient for negative controls.
ClaimReport seen_area_inequality(double linear = 2.0 * 3.14159265358979323846);

/// Grid minimum of F over (0, t_max] with `samples` points; OpenMP reduction.
double seen_area_grid_min(double linear, double t_max, std::size_t samples);
double seen_area_grid_min_serial(double linear, double t_max, std::size_t samples);

/// Intersection-parity bookkeeping for three boundary slopes. When
/// c1 + c2 + c3 = 0 in homology, bilinearity gives
/// Δ12 + Δ13 + Δ23 = Δ12; an odd value is the parity obstruction.
ClaimReport parity_check(const std::array<Horocycle, 3>& slopes);

}  // namespace hypants
