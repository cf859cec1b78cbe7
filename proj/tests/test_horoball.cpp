#include <cmath>
#include <stdexcept>

#include "doctest.h"

#include "hypants/horoball.hpp"
#include "hypants/pantsrep.hpp"
#include "hypants/random.hpp"

using namespace hypants;

namespace {

bool same_ball(const Horoball& x, const Horoball& y, double tol) {
  if (x.at_infinity() != y.at_infinity()) return false;
  if (std::abs(x.size() - y.size()) > tol * std::max(1.0, x.size())) return false;
  return x.center().approx_equal(y.center(), tol);
}

}  // namespace

TEST_SUITE("horoball") {
  TEST_CASE("construction") {
    CHECK_THROWS_AS(Horoball(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Horoball(0.0, -1.0), std::invalid_argument);
    CHECK(Horoball::at_infinity(2.0).at_infinity());
  }

  TEST_CASE("translation moves the centre") {
    const Horoball b(Complex(0.3, 0.4), 0.7);
    const auto img = apply_to_horoball(Mobius::translation(Complex(1.0, -2.0)), b);
    CHECK(img.center().approx_equal(Complex(1.3, -1.6)));
    CHECK(img.size() == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(apply_to_horoball(Mobius::translation(5.0), Horoball::at_infinity(3.0)).size() ==
          doctest::Approx(3.0));
  }

  TEST_CASE("inversion sends H_inf at height h to the ball at 0 of diameter 1/h") {
    const Mobius s(0.0, -1.0, 1.0, 0.0);
    for (double h : {0.5, 1.0, 2.0, 7.0}) {
      const auto img = apply_to_horoball(s, Horoball::at_infinity(h));
      CHECK(img.center().approx_equal(0.0));
      CHECK(img.size() == doctest::Approx(1.0 / h).epsilon(1e-15));
    }
    // Boundary check: three points of the horosphere at height h go to points
    // of the sphere through 0 with top at i/h. The upper-half-space action of
    // z -> -1/z is (x, t) -> (-conj(x), t) / (|x|^2 + t^2).
    const double h = 2.0;
    for (Complex x : {Complex(0.0), Complex(1.0, 0.0), Complex(-0.3, 2.0)}) {
      const double denom = std::norm(x) + h * h;
      const Complex xi = -std::conj(x) / denom;
      const double ti = h / denom;
      // On the sphere of diameter 1/h resting on 0: |xi|^2 + (ti - 1/(2h))^2 = 1/(4h^2).
      CHECK(std::norm(xi) + std::pow(ti - 0.5 / h, 2) == doctest::Approx(0.25 / (h * h)).epsilon(1e-12));
    }
  }

  TEST_CASE("Q(1) sends H_inf to the unit ball at 0") {
    const auto img = apply_to_horoball(q_matrix(1.0), Horoball::at_infinity(1.0));
    CHECK(img.center().approx_equal(0.0));
    CHECK(img.size() == doctest::Approx(1.0));
  }

  TEST_CASE("finite ball sent to infinity") {
    const Mobius s(0.0, -1.0, 1.0, 0.0);
    const auto img = apply_to_horoball(s, Horoball(0.0, 0.25));
    CHECK(img.at_infinity());
    CHECK(img.size() == doctest::Approx(4.0));
  }

  TEST_CASE("equivariance") {
    Sampler rng(31);
    for (int i = 0; i < 300; ++i) {
      const Mobius f = rng.mobius(), g = rng.mobius();
      const Horoball b = (i % 3 == 0) ? Horoball::at_infinity(rng.uniform(0.5, 2.0))
                                      : Horoball(rng.in_box(2.0), rng.uniform(0.1, 2.0));
      const Horoball lhs = apply_to_horoball(f * g, b);
      const Horoball rhs = apply_to_horoball(f, apply_to_horoball(g, b));
      if (!lhs.at_infinity() && (lhs.size() > 1e4 || std::abs(lhs.center().value()) > 1e4)) continue;
      CHECK(same_ball(lhs, rhs, 1e-7));
    }
  }

  TEST_CASE("tangency is Moebius invariant") {
    Sampler rng(32);
    for (int i = 0; i < 300; ++i) {
      const Complex c = rng.in_box(2.0);
      const double d = rng.uniform(0.2, 1.5), e = rng.uniform(0.2, 1.5);
      const Complex c2 = c + std::polar(std::sqrt(d * e), rng.uniform(0.0, 6.28));
      const Horoball x(c, d), y(c2, e);
      REQUIRE(horoballs_tangent(x, y, 1e-12));
      const Mobius f = rng.mobius();
      const Horoball fx = apply_to_horoball(f, x), fy = apply_to_horoball(f, y);
      const double scale = std::max({1.0, fx.size(), fy.size()});
      CHECK(std::abs(horoball_gap(fx, fy)) <= 1e-8 * scale * scale);
    }
  }

  TEST_CASE("gap, disjointness and tangency") {
    const Horoball a(0.0, 1.0), b(1.0, 1.0), c(0.5, 1.0);
    CHECK(horoballs_tangent(a, b));
    CHECK(horoballs_disjoint(a, b));
    CHECK_FALSE(horoballs_disjoint(a, c));
    const auto plane = Horoball::at_infinity(1.0);
    CHECK(horoballs_tangent(plane, a));
    CHECK(horoballs_disjoint(plane, Horoball(0.0, 0.5)));
    CHECK_FALSE(horoballs_disjoint(plane, Horoball(0.0, 1.5)));
    CHECK(horoball_gap(a, b) == doctest::Approx(0.0));
  }

  TEST_CASE("cusp lattice") {
    const CuspLattice square(2.0, Complex(0.0, 2.0));
    CHECK(square.area() == doctest::Approx(4.0));
    CHECK(square.diameter() == doctest::Approx(std::sqrt(8.0)));
    const auto [u, v] = square.coordinates(Complex(3.0, -1.0));
    CHECK(u == doctest::Approx(1.5));
    CHECK(v == doctest::Approx(-0.5));
    CHECK(std::abs(square.reduce(Complex(-0.5, 0.0)) - Complex(1.5, 0.0)) < 1e-15);
    CHECK(std::abs(square.reduce(Complex(2.0 - 1e-12, 4.0))) < 1e-15);
    CHECK_THROWS_AS(CuspLattice(1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(CuspLattice(0.0, 1.0), std::invalid_argument);

    const CuspLattice sheared(Complex(1.0, 0.2), Complex(0.3, 1.1));
    Sampler rng(33);
    for (int i = 0; i < 100; ++i) {
      const Complex z = rng.in_box(10.0);
      const Complex r = sheared.reduce(z);
      const auto [ru, rv] = sheared.coordinates(r);
      CHECK(ru >= 0.0);
      CHECK(ru < 1.0);
      CHECK(rv >= 0.0);
      CHECK(rv < 1.0);
      const auto [du, dv] = sheared.coordinates(z - r);
      CHECK(std::abs(du - std::round(du)) < 1e-9);
      CHECK(std::abs(dv - std::round(dv)) < 1e-9);
    }
  }

  TEST_CASE("horocycles") {
    const CuspLattice lattice(2.0, Complex(1.0, 2.0));
    const auto h = make_horocycle(lattice, 1, 1, 2.0);
    CHECK(h.length == doctest::Approx(std::abs(Complex(3.0, 2.0)) / 2.0));
    CHECK(h.primitive());
    CHECK_FALSE(make_horocycle(lattice, 2, 4).primitive());
    CHECK_THROWS_AS(make_horocycle(lattice, 1, 0, 0.0), std::invalid_argument);
  }
}
