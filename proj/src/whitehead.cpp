#include "hypants/whitehead.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hypants {

using std::numbers::pi;

Mobius WhiteheadRep::q_squared_closed_form() const {
  return {1.0 / (a * a) - 2.0, 1.0, -1.0, 0.0};
}

WhiteheadRep build_rho(Complex a, double eps) {
  if (std::abs(a) <= eps) throw std::invalid_argument("build_rho: a must be nonzero");
  return {a, Mobius(1.0, 2.0, 0.0, 1.0), Mobius(1.0, 0.0, -2.0, 1.0),
          Mobius(1.0 / a - a, a, -a, a)};
}

double RelationResiduals::max() const { return std::max({r1, r2, q_squared}); }

RelationResiduals relation_residuals(const WhiteheadRep& rho) {
  const Mobius q2 = rho.q * rho.q;
  const Mobius x = rho.q.inverse() * rho.c1 * rho.q;
  const Mobius y = rho.c1 * rho.c2;
  RelationResiduals r;
  r.r1 = psl_distance(rho.c1 * q2, q2 * rho.c2);
  r.r2 = identity_residual(x * y * x.inverse() * y.inverse());
  r.q_squared = psl_distance(q2, rho.q_squared_closed_form());
  return r;
}

std::vector<RelationResiduals> relation_scan_serial(std::span<const Complex> params) {
  std::vector<RelationResiduals> out(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    out[i] = relation_residuals(build_rho(params[i]));
  }
  return out;
}

std::vector<RelationResiduals> relation_scan(std::span<const Complex> params) {
  std::vector<RelationResiduals> out(params.size());
  const auto n = static_cast<std::ptrdiff_t>(params.size());
  // build_rho can throw; exceptions must not cross the parallel region.
  std::vector<char> bad(params.size(), 0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (std::abs(params[i]) <= kDefaultEpsilon) {
      bad[i] = 1;
      continue;
    }
    out[i] = relation_residuals(build_rho(params[i]));
  }
  for (char b : bad) {
    if (b) throw std::invalid_argument("relation_scan: a must be nonzero");
  }
  return out;
}

Mobius evaluate_word(const WhiteheadRep& rho, std::string_view word) {
  Mobius result = Mobius::identity();
  std::size_t i = 0;
  while (i < word.size()) {
    if (std::isspace(static_cast<unsigned char>(word[i])) || word[i] == '*') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < word.size() && !std::isspace(static_cast<unsigned char>(word[j])) &&
           word[j] != '*') {
      ++j;
    }
    std::string token(word.substr(i, j - i));
    i = j;
    bool inverse = false;
    if (token.size() > 3 && token.ends_with("^-1")) {
      inverse = true;
      token.resize(token.size() - 3);
    }
    const Mobius* letter = nullptr;
    if (token == "c1") letter = &rho.c1;
    else if (token == "c2") letter = &rho.c2;
    else if (token == "q") letter = &rho.q;
    else throw std::invalid_argument("evaluate_word: unknown letter '" + token + "'");
    result = result * (inverse ? letter->inverse() : *letter);
  }
  return result;
}

namespace {

// zeta(2n) / (n (2n+1)) for n = 1..kTerms. At |θ| <= π/2 the n-th term is at
// most 4^-n times this, so 40 terms are far past double precision.
constexpr int kTerms = 40;

const std::array<double, kTerms>& lobachevsky_coefficients() {
  static const std::array<double, kTerms> table = [] {
    std::array<double, kTerms> t{};
    for (int n = 1; n <= kTerms; ++n) {
      t[n - 1] = std::riemann_zeta(2.0 * n) / (n * (2.0 * n + 1.0));
    }
    return t;
  }();
  return table;
}

// θ in (0, π/2].
double lobachevsky_reduced(double theta) {
  const auto& coeff = lobachevsky_coefficients();
  const double r2 = (theta / pi) * (theta / pi);
  double power = r2;
  double sum = 0.0;
  for (double c : coeff) {
    const double term = c * power;
    sum += term;
    if (term < 1e-18) break;
    power *= r2;
  }
  return theta * (1.0 - std::log(2.0 * theta) + sum);
}

}  // namespace

double lobachevsky(double theta) {
  double t = std::fmod(theta, pi);
  if (t < 0.0) t += pi;
  if (t == 0.0) return 0.0;
  if (t > pi / 2) return -lobachevsky_reduced(pi - t);
  return lobachevsky_reduced(t);
}

TetShape::TetShape(Complex x, double eps) : x_(x) {
  if (std::abs(x) <= eps || std::abs(x - 1.0) <= eps || std::abs(x + 1.0) <= eps) {
    throw std::invalid_argument("TetShape: degenerate shape (x in {0, 1, -1})");
  }
  flat_ = std::abs(x.imag()) <= scaled_tolerance(eps, std::abs(x));
}

double tet_volume(const TetShape& shape) {
  if (shape.flat()) return 0.0;
  const Complex x = shape.x();
  return lobachevsky(std::arg(x)) + lobachevsky(std::arg(1.0 / (1.0 - x))) +
         lobachevsky(std::arg(1.0 - 1.0 / x));
}

double whitehead_volume(const TetShape& shape) {
  if (shape.flat()) return 0.0;
  return 2.0 * tet_volume(shape) + 2.0 * tet_volume(TetShape(shape.companion()));
}

NRParameter nr_parameter(Complex x, double eps) {
  if (std::abs(x) <= eps) throw std::invalid_argument("nr_parameter: x must be nonzero");
  const Complex z = x - 1.0 / x;
  const bool degenerate = std::abs(x - 1.0) <= eps || std::abs(x + 1.0) <= eps;
  return {x, z, degenerate};
}

ClaimReport index_volume_check(double volume, int index, double lower_bound) {
  if (index < 1) throw std::invalid_argument("index_volume_check: index must be >= 1");
  ClaimReport r;
  r.claim_id = "index-volume";
  r.tolerance = 0.0;
  const double quotient = volume / index;
  const bool proper = index >= 2;
  const bool below = quotient < lower_bound;
  r.add("volume", volume);
  r.add("index", static_cast<double>(index));
  r.add("quotient_volume", quotient);
  r.add("lower_bound", lower_bound);
  r.add("proper_index_excluded", proper && below ? 1.0 : 0.0);
  // Index 1 constrains nothing. A proper index is excluded only if the
  // quotient volume falls below the minimal volume.
  r.verdict = (!proper || below) ? Verdict::pass : Verdict::fail;
  r.constants = {
      {"whitehead_volume", volume, "computed: two pairs of ideal tetrahedra of shape i"},
      {"half_volume_bound", 1.84, "computed: whitehead_volume / 2 rounded up"},
      {"minimal_cusped_volume", lower_bound,
       "literature: Cao-Meyerhoff lower bound for orientable cusped hyperbolic 3-manifolds"},
  };
  return r;
}

ClaimReport index_volume_check() {
  return index_volume_check(whitehead_volume(TetShape(Complex(0.0, 1.0))));
}

}  // namespace hypants
