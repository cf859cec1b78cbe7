#include "hypants/horoball.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hypants {

Horoball::Horoball(ComplexValue center, double size) : center_(center), size_(size) {
  if (!(size > 0.0) || !std::isfinite(size)) {
    throw std::invalid_argument("Horoball: size must be positive and finite");
  }
}

Horoball apply_to_horoball(const Mobius& f, const Horoball& ball) {
  const Complex c = f.a21();
  const Complex d = f.a22();
  if (ball.at_infinity()) {
    const double h = ball.size();
    if (f.fixes_infinity(1e-14)) {
      // z -> (a z + b)/d scales heights by |a/d| = |a|^2.
      return Horoball::at_infinity(h * std::norm(f.a11()));
    }
    return {ComplexValue(f.a11() / c), 1.0 / (std::norm(c) * h)};
  }
  const Complex p = ball.center().value();
  const ComplexValue image = apply_boundary(f, ball.center());
  if (image.is_infinite()) {
    return Horoball::at_infinity(1.0 / (std::norm(c) * ball.size()));
  }
  return {image, ball.size() / std::norm(c * p + d)};
}

double horoball_gap(const Horoball& lhs, const Horoball& rhs) {
  if (lhs.at_infinity() && rhs.at_infinity()) return -std::min(lhs.size(), rhs.size());
  if (lhs.at_infinity()) return lhs.size() - rhs.size();
  if (rhs.at_infinity()) return rhs.size() - lhs.size();
  return std::norm(lhs.center().value() - rhs.center().value()) - lhs.size() * rhs.size();
}

namespace {
double gap_scale(const Horoball& lhs, const Horoball& rhs) {
  return std::max(lhs.size(), 1.0) * std::max(rhs.size(), 1.0);
}
}  // namespace

bool horoballs_disjoint(const Horoball& lhs, const Horoball& rhs, double eps) {
  return horoball_gap(lhs, rhs) >= -eps * gap_scale(lhs, rhs);
}

bool horoballs_tangent(const Horoball& lhs, const Horoball& rhs, double eps) {
  return std::abs(horoball_gap(lhs, rhs)) <= eps * gap_scale(lhs, rhs);
}

CuspLattice::CuspLattice(Complex t1, Complex t2) : t1_(t1), t2_(t2) {
  const double scale = std::max(std::norm(t1), std::norm(t2));
  if (scale == 0.0 || area() <= 1e-12 * scale) {
    throw std::invalid_argument("CuspLattice: translations are linearly dependent");
  }
}

double CuspLattice::area() const { return std::abs((std::conj(t1_) * t2_).imag()); }

double CuspLattice::diameter() const {
  return std::max(std::abs(t1_ + t2_), std::abs(t1_ - t2_));
}

std::pair<double, double> CuspLattice::coordinates(Complex z) const {
  // Solve z = u t1 + v t2 over R (Cramer).
  const double det = t1_.real() * t2_.imag() - t1_.imag() * t2_.real();
  const double u = (z.real() * t2_.imag() - z.imag() * t2_.real()) / det;
  const double v = (t1_.real() * z.imag() - t1_.imag() * z.real()) / det;
  return {u, v};
}

Complex CuspLattice::reduce(Complex z, double tol) const {
  auto wrap = [tol](double x) {
    double f = x - std::floor(x);
    if (f >= 1.0 - tol) f = 0.0;
    if (f < tol) f = 0.0;
    return f;
  };
  const auto [u, v] = coordinates(z);
  return wrap(u) * t1_ + wrap(v) * t2_;
}

bool Horocycle::primitive() const { return std::gcd(p, q) == 1; }

Horocycle make_horocycle(const CuspLattice& lattice, int p, int q, double height) {
  if (!(height > 0.0)) throw std::invalid_argument("make_horocycle: height must be positive");
  const Complex v = static_cast<double>(p) * lattice.t1() + static_cast<double>(q) * lattice.t2();
  return {p, q, std::abs(v) / height};
}

}  // namespace hypants
