#include <cmath>
#include <numbers>
#include <omp.h>
#include <stdexcept>

#include "doctest.h"

#include "hypants/claims.hpp"
#include "hypants/random.hpp"
#include "hypants/whitehead.hpp"
#include "oracles.hpp"

using namespace hypants;
using std::numbers::pi;

namespace {

constexpr double kCatalan = 0.915965594177219015054603514932384110774;

double raw_residual(const oracle::Mat& m, const oracle::Mat& target) {
  double plus = 0.0, minus = 0.0;
  for (int i = 0; i < 4; ++i) {
    plus = std::max(plus, std::abs(m[i] - target[i]));
    minus = std::max(minus, std::abs(m[i] + target[i]));
  }
  return std::min(plus, minus);
}

}  // namespace

TEST_SUITE("whitehead") {
  TEST_CASE("symbolic relations hold identically in a") {
    using oracle::Laurent;
    const auto c1 = oracle::lconst(1, 2, 0, 1);
    const auto c2 = oracle::lconst(1, 0, -2, 1);
    const auto q = oracle::q_symbolic();
    const auto q2 = oracle::lmul(q, q);
    const oracle::LMat expected_q2{Laurent::mono(-2, 1) + Laurent::constant(-2), Laurent::constant(1),
                                   Laurent::constant(-1), Laurent::constant(0)};
    CHECK(q2 == expected_q2);
    CHECK(oracle::lmul(c1, q2) == oracle::lmul(q2, c2));
    const auto x = oracle::lmul(oracle::lmul(oracle::linv(q), c1), q);
    const auto y = oracle::lmul(c1, c2);
    const auto comm = oracle::lmul(oracle::lmul(x, y), oracle::lmul(oracle::linv(x), oracle::linv(y)));
    CHECK(oracle::lequal_up_to_sign(comm, oracle::lconst(1, 0, 0, 1)));
    // det Q = 1
    CHECK(q[0] * q[3] - q[1] * q[2] == Laurent::constant(1));
  }

  TEST_CASE("build_rho at a = 1") {
    const auto rho = build_rho(1.0);
    CHECK(psl_distance(rho.q, Mobius(0.0, 1.0, -1.0, 1.0)) < 1e-15);
    CHECK(psl_distance(rho.q * rho.q, Mobius(-1.0, 1.0, -1.0, 0.0)) < 1e-15);
    CHECK(relation_residuals(rho).max() < 1e-12);
  }

  TEST_CASE("build_rho at a = 2i") {
    const auto rho = build_rho(Complex(0.0, 2.0));
    const auto res = relation_residuals(rho);
    CHECK(res.r1 < 1e-12);
    CHECK(res.r2 < 1e-12);
    CHECK(res.q_squared < 1e-12);
  }

  TEST_CASE("build_rho rejects zero") {
    CHECK_THROWS_AS(build_rho(0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_rho(1e-12), std::invalid_argument);
  }

  TEST_CASE("numeric relations against raw matrices") {
    Sampler rng(21);
    for (int i = 0; i < 300; ++i) {
      const Complex a = rng.in_annulus(0.1, 10.0);
      const oracle::Mat q{1.0 / a - a, a, -a, a};
      const oracle::Mat c1{1.0, 2.0, 0.0, 1.0}, c2{1.0, 0.0, -2.0, 1.0};
      const auto q2 = oracle::mul(q, q);
      const double scale = std::max({1.0, std::abs(q2[0]), std::abs(q2[1])});
      CHECK(raw_residual(q2, {1.0 / (a * a) - 2.0, 1.0, -1.0, 0.0}) <= 1e-12 * scale);
      CHECK(raw_residual(oracle::mul(c1, q2), oracle::mul(q2, c2)) <= 1e-11 * scale);
      const auto rho = build_rho(a);
      CHECK(relation_residuals(rho).max() < 1e-9);
    }
  }

  TEST_CASE("relation_scan matches the serial reference") {
    Sampler rng(22);
    std::vector<Complex> params;
    for (int i = 0; i < 500; ++i) params.push_back(rng.in_annulus(0.1, 10.0));
    omp_set_num_threads(4);
    const auto par = relation_scan(params);
    const auto ser = relation_scan_serial(params);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
      CHECK(par[i].r1 == ser[i].r1);
      CHECK(par[i].r2 == ser[i].r2);
      CHECK(par[i].q_squared == ser[i].q_squared);
    }
    const std::vector<Complex> bad{1.0, 0.0};
    CHECK_THROWS_AS(relation_scan(bad), std::invalid_argument);
  }

  TEST_CASE("evaluate_word") {
    const auto rho = build_rho(Complex(0.5, 0.7));
    CHECK(psl_distance(evaluate_word(rho, "c1 c2"), rho.c1 * rho.c2) < 1e-14);
    CHECK(psl_distance(evaluate_word(rho, "q^-1*c1*q"), rho.q.inverse() * rho.c1 * rho.q) < 1e-12);
    CHECK(identity_residual(evaluate_word(rho, "")) == 0.0);
    CHECK(identity_residual(evaluate_word(rho, "q q^-1")) < 1e-12);
    // The word q^-1 c1 q is parabolic fixing q^-1(∞) = 1.
    const Mobius w = evaluate_word(rho, "q^-1 c1 q");
    CHECK(classify(w).kind == IsometryKind::parabolic);
    CHECK(fixed_points(w)[0].approx_equal(1.0, 1e-9));
    CHECK_THROWS_AS(evaluate_word(rho, "c3"), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_word(rho, "q^2"), std::invalid_argument);
  }

  TEST_CASE("Lobachevsky examples") {
    CHECK(lobachevsky(0.0) == 0.0);
    CHECK(std::abs(lobachevsky(pi)) < 1e-12);
    CHECK(std::abs(lobachevsky(pi / 2)) < 1e-12);
    CHECK(std::abs(lobachevsky(pi / 4) - 0.4579827971) < 1e-10);
    CHECK(std::abs(lobachevsky(pi / 4) - kCatalan / 2) < 1e-12);
  }

  TEST_CASE("Lobachevsky agrees with the independent series and quadrature") {
    for (int i = 1; i <= 100; ++i) {
      const double theta = (pi / 2) * i / 100.0;
      const double series = oracle::lobachevsky_series(theta);
      CHECK(std::abs(lobachevsky(theta) - series) < 1e-10);
      CHECK(std::abs(lobachevsky_by_quadrature(theta) - series) < 1e-10);
    }
  }

  TEST_CASE("Lobachevsky symmetries") {
    Sampler rng(23);
    for (int i = 0; i < 200; ++i) {
      const double t = rng.uniform(-10.0, 10.0);
      CHECK(std::abs(lobachevsky(-t) + lobachevsky(t)) < 1e-10);
      CHECK(std::abs(lobachevsky(t + pi) - lobachevsky(t)) < 1e-10);
      CHECK(std::abs(lobachevsky(2 * t) - 2 * lobachevsky(t) - 2 * lobachevsky(t + pi / 2)) < 1e-9);
    }
  }

  TEST_CASE("tetrahedron volumes") {
    CHECK(std::abs(tet_volume(TetShape(Complex(0.0, 1.0))) - 0.9159655942) < 1e-10);
    CHECK(std::abs(tet_volume(TetShape(Complex(0.0, 1.0))) -
                   (oracle::lobachevsky_series(pi / 2) + 2 * oracle::lobachevsky_series(pi / 4))) < 1e-10);
    CHECK(tet_volume(TetShape(0.5)) == 0.0);
    CHECK(TetShape(0.5).flat());
    const TetShape regular(std::polar(1.0, pi / 3));
    CHECK(std::abs(tet_volume(regular) - 1.0149416064) < 1e-10);
    CHECK(std::abs(tet_volume(regular) - 3 * oracle::lobachevsky_series(pi / 3)) < 1e-10);
    CHECK_THROWS_AS(TetShape(0.0), std::invalid_argument);
    CHECK_THROWS_AS(TetShape(1.0), std::invalid_argument);
    CHECK_THROWS_AS(TetShape(-1.0), std::invalid_argument);
  }

  TEST_CASE("regular shape maximizes volume on a grid") {
    const double best = tet_volume(TetShape(std::polar(1.0, pi / 3)));
    for (int i = -20; i <= 20; ++i) {
      for (int j = 1; j <= 20; ++j) {
        const Complex x(0.5 + 0.1 * i, 0.1 * j);
        if (std::abs(x - 1.0) < 1e-9) continue;
        CHECK(tet_volume(TetShape(x)) <= best + 1e-12);
        CHECK(tet_volume(TetShape(x)) >= 0.0);
      }
    }
  }

  TEST_CASE("Whitehead volume") {
    const double v = whitehead_volume(TetShape(Complex(0.0, 1.0)));
    CHECK(std::abs(v - 3.6638623767) < 1e-10);
    CHECK(std::abs(v - 4 * kCatalan) < 1e-12);
    CHECK(whitehead_volume(TetShape(0.5)) == 0.0);
    const double w = whitehead_volume(TetShape(Complex(0.5, 0.8)));
    CHECK(w > 0.0);
    CHECK(w < 3.6639);
    Sampler rng(24);
    for (int i = 0; i < 100; ++i) {
      const Complex x = rng.in_annulus(0.2, 5.0);
      const TetShape s(x), c(-1.0 / x);
      CHECK(std::abs(whitehead_volume(s) - whitehead_volume(TetShape(s.companion()))) < 1e-12);
      CHECK(std::abs(whitehead_volume(s) - whitehead_volume(c)) < 1e-12);
    }
  }

  TEST_CASE("Neumann-Reid parameter") {
    const auto at_i = nr_parameter(Complex(0.0, 1.0));
    CHECK(std::abs(at_i.z - Complex(0.0, 2.0)) < 1e-15);
    CHECK_FALSE(at_i.degenerate);
    const auto at_one = nr_parameter(1.0);
    CHECK(at_one.degenerate);
    CHECK(std::abs(at_one.z) < 1e-15);
    CHECK(nr_parameter(-1.0).degenerate);
    CHECK_THROWS_AS(nr_parameter(0.0), std::invalid_argument);
    Sampler rng(25);
    for (int i = 0; i < 100; ++i) {
      const Complex x = rng.in_annulus(0.1, 10.0);
      CHECK(std::abs(nr_parameter(x).z - nr_parameter(-1.0 / x).z) <= 1e-12 * std::abs(x - 1.0 / x));
      CHECK(std::abs(nr_parameter(x).z - (x - 1.0 / x)) <= 1e-15 * std::abs(x - 1.0 / x) + 1e-15);
    }
  }

  TEST_CASE("index argument") {
    const auto r = index_volume_check();
    CHECK(r.verdict == Verdict::pass);
    CHECK(std::abs(r.real("quotient_volume") - 1.831931) < 1e-6);
    CHECK(r.real("quotient_volume") < 1.84);
    CHECK(r.real("lower_bound") == 2.0298);
    CHECK(r.constants.size() == 3);
    for (const auto& c : r.constants) CHECK_FALSE(c.provenance.empty());

    const auto fake = index_volume_check(4.2);
    CHECK(fake.verdict == Verdict::fail);
    const auto trivial = index_volume_check(whitehead_volume(TetShape(Complex(0.0, 1.0))), 1);
    CHECK(trivial.verdict == Verdict::pass);
    CHECK(trivial.real("proper_index_excluded") == 0.0);
  }
}
