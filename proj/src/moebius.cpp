#include "hypants/moebius.hpp"

#include <cmath>
#include <stdexcept>

namespace hypants {

namespace {

// Entries below this fraction of the largest entry count as zero when picking
// the canonical sign or deciding whether a21 vanishes projectively.
constexpr double kRelativeZero = 1e-14;

std::array<Complex, 4> normalized(std::array<Complex, 4> m) {
  double norm = 0.0;
  for (const auto& e : m) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
      throw std::invalid_argument("Mobius: non-finite entry");
    }
    norm = std::max(norm, std::abs(e));
  }
  const Complex det = m[0] * m[3] - m[1] * m[2];
  if (norm == 0.0 || std::abs(det) <= kRelativeZero * norm * norm) {
    throw std::invalid_argument("Mobius: singular matrix");
  }
  const Complex s = std::sqrt(det);
  for (auto& e : m) e /= s;
  return m;
}

}  // namespace

Mobius::Mobius(Complex a11, Complex a12, Complex a21, Complex a22)
    : m_(normalized({a11, a12, a21, a22})) {}

Mobius Mobius::dilation(Complex k) {
  if (k == Complex(0.0)) throw std::invalid_argument("Mobius::dilation: zero factor");
  const Complex r = std::sqrt(k);
  return {r, 0.0, 0.0, 1.0 / r};
}

double Mobius::max_entry_norm() const {
  double n = 0.0;
  for (const auto& e : m_) n = std::max(n, std::abs(e));
  return n;
}

Mobius Mobius::inverse() const { return Mobius(Raw{}, {m_[3], -m_[1], -m_[2], m_[0]}); }

Mobius Mobius::negated() const { return Mobius(Raw{}, {-m_[0], -m_[1], -m_[2], -m_[3]}); }

Mobius Mobius::canonical() const {
  const double cut = kRelativeZero * max_entry_norm();
  for (const auto& e : m_) {
    const double mag = std::abs(e);
    if (mag <= cut) continue;
    bool keep;
    if (std::abs(e.real()) > kRelativeZero * mag) {
      keep = e.real() > 0.0;
    } else {
      keep = e.imag() > 0.0;
    }
    return keep ? *this : negated();
  }
  return *this;  // unreachable for det-1 matrices
}

bool Mobius::fixes_infinity(double eps) const {
  return std::abs(m_[2]) <= eps * std::max(1.0, max_entry_norm());
}

Mobius compose(const Mobius& f, const Mobius& g) {
  const auto& a = f.m_;
  const auto& b = g.m_;
  std::array<Complex, 4> p{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                           a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
  const Complex s = std::sqrt(p[0] * p[3] - p[1] * p[2]);
  for (auto& e : p) e /= s;
  return Mobius(Mobius::Raw{}, p);
}

double psl_distance(const Mobius& f, const Mobius& g) {
  double plus = 0.0;
  double minus = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    plus = std::max(plus, std::abs(f.entries()[i] - g.entries()[i]));
    minus = std::max(minus, std::abs(f.entries()[i] + g.entries()[i]));
  }
  return std::min(plus, minus);
}

bool approx_equal(const Mobius& f, const Mobius& g, double eps) {
  const double scale = std::max(f.max_entry_norm(), g.max_entry_norm());
  return psl_distance(f, g) <= scaled_tolerance(eps, scale);
}

double identity_residual(const Mobius& f) { return psl_distance(f, Mobius::identity()); }

std::string_view to_string(IsometryKind kind) {
  switch (kind) {
    case IsometryKind::identity: return "identity";
    case IsometryKind::parabolic: return "parabolic";
    case IsometryKind::elliptic: return "elliptic";
    case IsometryKind::loxodromic: return "loxodromic";
  }
  return "unknown";
}

IsometryClass classify(const Mobius& f, double eps) {
  const Complex tr = f.trace();
  if (identity_residual(f) <= scaled_tolerance(eps, f.max_entry_norm())) {
    return {IsometryKind::identity, tr};
  }
  const double tol = scaled_tolerance(eps, std::abs(tr));
  if (std::abs(tr - 2.0) <= tol || std::abs(tr + 2.0) <= tol) {
    return {IsometryKind::parabolic, tr};
  }
  if (std::abs(tr.imag()) <= tol && std::abs(tr.real()) < 2.0) {
    return {IsometryKind::elliptic, tr};
  }
  return {IsometryKind::loxodromic, tr};
}

std::vector<ComplexValue> fixed_points(const Mobius& f, double eps) {
  const auto cls = classify(f, eps);
  if (cls.kind == IsometryKind::identity) {
    throw std::invalid_argument("fixed_points: identity fixes every point");
  }
  const Complex a = f.a11(), b = f.a12(), c = f.a21(), d = f.a22();
  const bool parabolic = cls.kind == IsometryKind::parabolic;
  if (f.fixes_infinity(eps)) {
    if (parabolic) return {ComplexValue::infinity()};
    return {ComplexValue::infinity(), ComplexValue(b / (d - a))};
  }
  if (parabolic) return {ComplexValue((a - d) / (2.0 * c))};
  const Complex s = std::sqrt(cls.trace * cls.trace - 4.0);
  return {ComplexValue((a - d + s) / (2.0 * c)), ComplexValue((a - d - s) / (2.0 * c))};
}

ComplexValue apply_boundary(const Mobius& f, const ComplexValue& z) {
  const Complex a = f.a11(), b = f.a12(), c = f.a21(), d = f.a22();
  if (z.is_infinite()) {
    if (std::abs(c) <= kRelativeZero * f.max_entry_norm()) return ComplexValue::infinity();
    return ComplexValue(a / c);
  }
  const Complex w = z.value();
  const Complex den = c * w + d;
  const Complex num = a * w + b;
  if (std::abs(den) <= kRelativeZero * std::max(std::abs(c * w), std::abs(d))) {
    return ComplexValue::infinity();
  }
  return ComplexValue(num / den);
}

Mobius map_to_infinity_zero_one(const ComplexValue& p, const ComplexValue& q,
                                const ComplexValue& r) {
  if (p.approx_equal(q, 0.0) || p.approx_equal(r, 0.0) || q.approx_equal(r, 0.0)) {
    throw std::invalid_argument("map_to_infinity_zero_one: points must be distinct");
  }
  // z -> (z - q)(r - p) / ((z - p)(r - q)), with the factors involving an
  // infinite point dropped.
  if (p.is_infinite()) {
    const Complex qq = q.value(), rr = r.value();
    return {1.0, -qq, 0.0, rr - qq};
  }
  if (q.is_infinite()) {
    const Complex pp = p.value(), rr = r.value();
    return {0.0, rr - pp, 1.0, -pp};
  }
  if (r.is_infinite()) {
    const Complex pp = p.value(), qq = q.value();
    return {1.0, -qq, 1.0, -pp};
  }
  const Complex pp = p.value(), qq = q.value(), rr = r.value();
  return {rr - pp, -qq * (rr - pp), rr - qq, -pp * (rr - qq)};
}

}  // namespace hypants
