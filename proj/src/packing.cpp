#include "hypants/packing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hypants {

using std::numbers::pi;

double horocycle_length(Complex translation, double height) {
  if (!(height > 0.0)) throw std::invalid_argument("horocycle_length: height must be positive");
  return std::abs(translation) / height;
}

double tangent_product(double l1, double l2, double gap) {
  if (!(l1 > 0.0) || !(l2 > 0.0)) {
    throw std::invalid_argument("tangent_product: lengths must be positive");
  }
  return l1 * l2 * std::exp(2.0 * gap);
}

int intersection_number(const Horocycle& s1, const Horocycle& s2) {
  return s1.p * s2.q - s2.p * s1.q;
}

ClaimReport intersection_area_bound(const Horocycle& s1, const Horocycle& s2,
                                    const CuspLattice& lattice, double height) {
  if (!s1.primitive() || !s2.primitive()) {
    throw std::invalid_argument("intersection_area_bound: slopes must be primitive");
  }
  const int delta = intersection_number(s1, s2);
  const double area = lattice.area() / (height * height);
  const double lhs = std::abs(delta) * area;
  const double rhs = s1.length * s2.length;
  const Complex v1 = static_cast<double>(s1.p) * lattice.t1() + static_cast<double>(s1.q) * lattice.t2();
  const Complex v2 = static_cast<double>(s2.p) * lattice.t1() + static_cast<double>(s2.q) * lattice.t2();
  const bool orthogonal =
      delta != 0 && std::abs((std::conj(v1) * v2).real()) <= 1e-9 * std::abs(v1) * std::abs(v2);

  ClaimReport r;
  r.claim_id = "delta-area-bound";
  r.tolerance = 1e-9;
  r.add("delta", static_cast<double>(delta));
  r.add("area", area);
  r.add("lhs", lhs);
  r.add("rhs", rhs);
  r.add("equality", std::abs(rhs - lhs) <= r.tolerance * std::max(1.0, rhs) ? 1.0 : 0.0);
  r.add("orthogonal", orthogonal ? 1.0 : 0.0);
  r.verdict = lhs <= rhs + r.tolerance * std::max(1.0, rhs) ? Verdict::pass : Verdict::fail;
  return r;
}

double straddle_min_height(double a) {
  if (!(a > 0.0) || a > 4.0) throw std::invalid_argument("straddle_min_height: a must lie in (0, 4]");
  if (a >= 2.0 * std::numbers::sqrt2) return std::sqrt(1.0 - 4.0 / (a * a));
  return std::sqrt(1.0 - (a / 4.0) * (a / 4.0));
}

namespace {

// Highest point of the disk family above x.
double envelope(double x, double a, long long k_lo, long long k_hi) {
  double top = 0.0;
  const double half = a / 2.0;
  const double small = a / 4.0;
  for (long long k = k_lo; k <= k_hi; ++k) {
    const double big_dx = x - static_cast<double>(k) * half;
    top = std::max(top, std::sqrt(std::max(0.0, 1.0 - big_dx * big_dx)));
    const double small_dx = big_dx - small;
    top = std::max(top, std::sqrt(std::max(0.0, small * small - small_dx * small_dx)));
  }
  return top;
}

template <class F>
std::pair<double, double> golden_section(F&& f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > 1e-14 * std::max(1.0, std::abs(hi))) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  const double x = 0.5 * (lo + hi);
  return {x, f(x)};
}

}  // namespace

double straddle_min_height_numeric(double a) {
  if (!(a > 0.0) || a > 4.0) {
    throw std::invalid_argument("straddle_min_height_numeric: a must lie in (0, 4]");
  }
  // Disks reaching into [0, a/2] have |k a/2 - x| <= 1.
  const auto reach = static_cast<long long>(std::ceil(2.0 / a)) + 1;
  const double period = a / 2.0;
  auto f = [&](double x) { return envelope(x, a, -reach, reach + 1); };

  constexpr int kSamples = 2048;
  double best_x = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kSamples; ++i) {
    const double x = period * i / kSamples;
    const double v = f(x);
    if (v < best) {
      best = v;
      best_x = x;
    }
  }
  const double step = period / kSamples;
  const auto [x, v] = golden_section(f, std::max(0.0, best_x - step), std::min(period, best_x + step));
  return std::min(best, v);
}

std::vector<double> straddle_scan_serial(std::span<const double> as) {
  std::vector<double> out(as.size());
  for (std::size_t i = 0; i < as.size(); ++i) out[i] = straddle_min_height_numeric(as[i]);
  return out;
}

std::vector<double> straddle_scan(std::span<const double> as) {
  for (double a : as) {
    if (!(a > 0.0) || a > 4.0) throw std::invalid_argument("straddle_scan: a must lie in (0, 4]");
  }
  std::vector<double> out(as.size());
  const auto n = static_cast<std::ptrdiff_t>(as.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = straddle_min_height_numeric(as[i]);
  return out;
}

double seen_area_slack(double t, double linear) {
  return (pi - 1.0) * t * t - linear * t + 1.5 * pi;
}

double seen_area_grid_min_serial(double linear, double t_max, std::size_t samples) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i <= samples; ++i) {
    best = std::min(best, seen_area_slack(t_max * static_cast<double>(i) / samples, linear));
  }
  return best;
}

double seen_area_grid_min(double linear, double t_max, std::size_t samples) {
  double best = std::numeric_limits<double>::infinity();
  const auto n = static_cast<std::ptrdiff_t>(samples);
#pragma omp parallel for reduction(min : best) schedule(static)
  for (std::ptrdiff_t i = 1; i <= n; ++i) {
    best = std::min(best, seen_area_slack(t_max * static_cast<double>(i) / samples, linear));
  }
  return best;
}

ClaimReport seen_area_inequality(double linear) {
  const double lead = pi - 1.0;
  const double constant = 1.5 * pi;
  // F(t) = lead (t - t*)^2 + F(t*),  t* = linear / (2 lead).
  const double t_star = linear / (2.0 * lead);
  const double f_star = constant - linear * linear / (4.0 * lead);
  const double discriminant = linear * linear - 4.0 * lead * constant;

  constexpr double kTMax = 10.0;
  constexpr std::size_t kSamples = 100000;
  const double grid_min = seen_area_grid_min(linear, kTMax, kSamples);
  const double step = kTMax / kSamples;
  const double centre = std::clamp(t_star, step, kTMax);
  const auto [t_num, f_num] = golden_section([&](double t) { return seen_area_slack(t, linear); },
                                             std::max(step, centre - 2.0 * step),
                                             std::min(kTMax, centre + 2.0 * step));
  const double numeric_min = std::min(grid_min, f_num);

  ClaimReport r;
  r.claim_id = "seen-area-quadratic";
  r.tolerance = 1e-9;
  r.add("linear_coefficient", linear);
  r.add("discriminant", discriminant);
  r.add("t_min", t_star);
  r.add("f_min", f_star);
  r.add("numeric_t_min", t_num);
  r.add("numeric_f_min", numeric_min);
  r.add("slack_at_t_2", seen_area_slack(2.0, linear));
  const bool positive = discriminant < 0.0 && f_star > 0.0 && numeric_min > 0.0;
  const bool agree = t_star <= 0.0 || t_star > kTMax ||
                     std::abs(numeric_min - f_star) <= r.tolerance * std::max(1.0, std::abs(f_star));
  r.verdict = positive && agree ? Verdict::pass : Verdict::fail;
  return r;
}

ClaimReport parity_check(const std::array<Horocycle, 3>& slopes) {
  const int d12 = intersection_number(slopes[0], slopes[1]);
  const int d13 = intersection_number(slopes[0], slopes[2]);
  const int d23 = intersection_number(slopes[1], slopes[2]);
  const int sum = d12 + d13 + d23;
  const bool null_boundary = slopes[0].p + slopes[1].p + slopes[2].p == 0 &&
                             slopes[0].q + slopes[1].q + slopes[2].q == 0;
  const bool identity_holds = !null_boundary || sum == d12;
  const bool odd = sum % 2 != 0;
  const bool within_bound = std::abs(d12) <= 1 && std::abs(d13) <= 1 && std::abs(d23) <= 1;

  ClaimReport r;
  r.claim_id = "parity-obstruction";
  r.tolerance = 0.0;
  r.add("delta_12", static_cast<double>(d12));
  r.add("delta_13", static_cast<double>(d13));
  r.add("delta_23", static_cast<double>(d23));
  r.add("sum", static_cast<double>(sum));
  r.add("null_boundary", null_boundary ? 1.0 : 0.0);
  r.add("parity_obstruction", null_boundary && odd ? 1.0 : 0.0);
  r.add("within_delta_bound", within_bound ? 1.0 : 0.0);
  r.add("forces_all_zero", null_boundary && !odd && within_bound ? 1.0 : 0.0);
  r.verdict = identity_holds ? Verdict::pass : Verdict::fail;
  return r;
}

}  // namespace hypants
