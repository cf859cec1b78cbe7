#include "hypants/pantsrep.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hypants {

namespace {

void require_peripheral(const Mobius& m, const char* name, double eps) {
  const auto kind = classify(m, eps).kind;
  if (kind == IsometryKind::elliptic || kind == IsometryKind::loxodromic) {
    throw std::invalid_argument(std::string("classify_pants_rep: ") + name + " is " +
                                std::string(to_string(kind)) + ", not parabolic");
  }
}

// A parabolic fixing ∞ is ±[[1,t],[0,1]]; return t.
Complex translation_length(const Mobius& m) { return m.a12() / m.a11(); }

// A parabolic fixing 0 is ±[[1,0],[z,1]]; return z.
Complex lower_entry(const Mobius& m) { return m.a21() / m.a11(); }

// Conjugator moving p to ∞ (identity if p already is ∞).
Mobius send_to_infinity(const ComplexValue& p) {
  if (p.is_infinite()) return Mobius::identity();
  return {0.0, 1.0, -1.0, p.value()};
}

PantsNormalForm reducible_form(const PantsRepresentation& rep, const ComplexValue& fix,
                               PantsKind kind) {
  const Mobius g = send_to_infinity(fix).canonical();
  const Complex z1 = translation_length(conjugate(g, rep.c1));
  const Complex z2 = translation_length(conjugate(g, rep.c2));
  return {kind, g, std::pair{z1, z2}};
}

}  // namespace

std::string_view to_string(PantsKind kind) {
  switch (kind) {
    case PantsKind::reducible: return "reducible";
    case PantsKind::rigid: return "rigid";
    case PantsKind::degenerate: return "degenerate";
  }
  return "unknown";
}

PantsRepresentation rigid_representation() {
  return {Mobius(1.0, 2.0, 0.0, 1.0), Mobius(1.0, 0.0, -2.0, 1.0)};
}

PantsRepresentation reducible_representation(Complex z1, Complex z2) {
  return {Mobius::translation(z1), Mobius::translation(z2)};
}

PantsNormalForm classify_pants_rep(const PantsRepresentation& rep, double eps) {
  require_peripheral(rep.c1, "c1", eps);
  require_peripheral(rep.c2, "c2", eps);
  require_peripheral(rep.c3(), "c1*c2", eps);

  const bool c1_trivial = classify(rep.c1, eps).kind == IsometryKind::identity;
  const bool c2_trivial = classify(rep.c2, eps).kind == IsometryKind::identity;
  if (c1_trivial && c2_trivial) {
    return {PantsKind::degenerate, Mobius::identity(), std::pair{Complex{}, Complex{}}};
  }
  if (c1_trivial || c2_trivial) {
    const Mobius& live = c1_trivial ? rep.c2 : rep.c1;
    return reducible_form(rep, fixed_points(live, eps).front(), PantsKind::degenerate);
  }

  const ComplexValue p1 = fixed_points(rep.c1, eps).front();
  const ComplexValue p2 = fixed_points(rep.c2, eps).front();
  if (p1.approx_equal(p2, eps)) return reducible_form(rep, p1, PantsKind::reducible);

  // Send fix(c1) -> ∞ and fix(c2) -> 0, then rescale so c1 becomes z + 2.
  const ComplexValue third =
      p1.is_infinite() || p2.is_infinite()
          ? ComplexValue(p1.is_infinite() ? p2.value() + 1.0 : p1.value() + 1.0)
          : ComplexValue(0.5 * (p1.value() + p2.value()) +
                         Complex(0.0, 0.5) * (p1.value() - p2.value()));
  const Mobius h = map_to_infinity_zero_one(p1, p2, third);
  const Complex t = translation_length(conjugate(h, rep.c1));
  const Mobius g = (Mobius::dilation(2.0 / t) * h).canonical();

  const PantsRepresentation rigid = rigid_representation();
  const Mobius c1n = conjugate(g, rep.c1);
  const Mobius c2n = conjugate(g, rep.c2);
  if (!approx_equal(c1n, rigid.c1, eps) || !approx_equal(c2n, rigid.c2, eps)) {
    const Complex z = lower_entry(c2n);
    throw std::invalid_argument(
        "classify_pants_rep: normalized c2 has lower entry " + ComplexValue(z).to_string() +
        "; c1*c2 parabolic forces -2");
  }
  return {PantsKind::rigid, g, std::nullopt};
}

Complex lower_unipotent_product_trace(Complex z) {
  const Mobius p = Mobius(1.0, 2.0, 0.0, 1.0) * Mobius(1.0, 0.0, z, 1.0);
  return p.trace();
}

std::pair<Complex, Complex> parabolic_product_roots() {
  auto solve = [](double target) { return Complex((target - 2.0) / 2.0); };
  return {solve(2.0), solve(-2.0)};
}

Mobius q_matrix(Complex a) {
  if (a == Complex(0.0)) throw std::invalid_argument("q_matrix: a must be nonzero");
  return {1.0 / a - a, a, -a, a};
}

Complex canonical_sign(Complex a) {
  const double mag = std::abs(a);
  if (std::abs(a.real()) > 1e-14 * mag) return a.real() > 0.0 ? a : -a;
  return a.imag() > 0.0 ? a : -a;
}

Complex extract_q_param(const Mobius& m, double eps) {
  // M(0) = a12/a22 = 1 and M(1) = ∞ <=> a21 + a22 = 0; det = 1 then fixes a11.
  const Complex d = m.a22();
  const double tol = scaled_tolerance(eps, m.max_entry_norm());
  if (std::abs(d) <= tol || std::abs(m.a12() - d) > tol || std::abs(m.a21() + d) > tol) {
    throw std::invalid_argument("extract_q_param: boundary condition failed");
  }
  return canonical_sign(d);
}

}  // namespace hypants
