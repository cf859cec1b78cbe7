// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//
// Usage: hypants_acceptance <path-to-hypants-cli> <source-dir> <scratch-dir>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "hypants/claims.hpp"
#include "hypants/horoball.hpp"
#include "hypants/orbit.hpp"
#include "hypants/packing.hpp"
#include "hypants/pantsrep.hpp"
#include "hypants/random.hpp"
#include "hypants/whitehead.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace hypants;
using std::numbers::pi;
using std::numbers::sqrt2;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

struct Criterion {
  std::string name;
  double time_limit;  // seconds; 0 means none
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::filesystem::path g_cli;
std::filesystem::path g_source;
std::filesystem::path g_scratch;

Outcome whitehead_volume_criterion() {
  const double v = whitehead_volume(TetShape(Complex(0.0, 1.0)));
  const double oracle_v = 4.0 * (oracle::lobachevsky_series(pi / 2) + 2.0 * oracle::lobachevsky_series(pi / 4));
  const double err = std::abs(v - oracle_v);
  // "3.66..." printed to two decimals.
  const bool printed = v >= 3.66 && v < 3.67;
  return {err <= 1e-6 && printed && std::abs(v - 3.663862377) <= 1e-9,
          "volume " + fmt("%.10f", v) + ", |oracle diff| " + fmt("%.2e", err)};
}

Outcome index_criterion() {
  const auto r = index_volume_check();
  const double half = r.real("quotient_volume");
  bool provenance = r.constants.size() == 3;
  for (const auto& c : r.constants) provenance = provenance && !c.provenance.empty();
  const bool ok = r.verdict == Verdict::pass && std::abs(half - 1.831931) <= 5e-7 && half < 1.84 &&
                  half < 2.0298 && r.real("lower_bound") == 2.0298 && provenance;
  return {ok, "half-volume " + fmt("%.6f", half) + " < 2.0298, constants " +
                  std::to_string(r.constants.size())};
}

Outcome relation_criterion() {
  Sampler rng(1001);
  std::vector<Complex> params;
  for (int i = 0; i < 1000; ++i) params.push_back(rng.in_annulus(0.1, 10.0));
  double worst = 0.0;
  for (const auto& r : relation_scan(params)) worst = std::max(worst, r.max());
  return {worst < 1e-9, "1000 samples, max residual " + fmt("%.2e", worst)};
}

Outcome classifier_criterion() {
  Sampler rng(1002);
  const auto rigid = rigid_representation();
  double worst = 0.0;
  int rigid_ok = 0, reducible_ok = 0;
  for (int i = 0; i < 500; ++i) {
    const Mobius g = rng.mobius();
    const PantsRepresentation rep{conjugate(g, rigid.c1), conjugate(g, rigid.c2)};
    const auto nf = classify_pants_rep(rep);
    if (nf.kind != PantsKind::rigid) continue;
    const double d = std::max(psl_distance(conjugate(nf.conjugator, rep.c1), rigid.c1),
                              psl_distance(conjugate(nf.conjugator, rep.c2), rigid.c2));
    worst = std::max(worst, d);
    if (d <= 1e-8) ++rigid_ok;
  }
  for (int i = 0; i < 500; ++i) {
    const auto base = reducible_representation(rng.in_annulus(0.1, 5.0), rng.in_annulus(0.1, 5.0));
    const Mobius g = rng.mobius();
    if (classify_pants_rep({conjugate(g, base.c1), conjugate(g, base.c2)}).kind == PantsKind::reducible) {
      ++reducible_ok;
    }
  }
  return {rigid_ok == 500 && reducible_ok == 500,
          std::to_string(rigid_ok) + "/500 rigid (max residual " + fmt("%.2e", worst) + "), " +
              std::to_string(reducible_ok) + "/500 reducible"};
}

Outcome trace_criterion() {
  Sampler rng(1003);
  double worst = 0.0;
  int parabolic_off_roots = 0;
  const Mobius c1(1.0, 2.0, 0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const Complex z = rng.in_box(5.0);
    const oracle::Mat p = oracle::mul({1.0, 2.0, 0.0, 1.0}, {1.0, 0.0, z, 1.0});
    worst = std::max(worst, std::abs(p[0] + p[3] - (2.0 + 2.0 * z)));
    worst = std::max(worst, std::abs(lower_unipotent_product_trace(z) - (2.0 + 2.0 * z)));
    if (classify(c1 * Mobius(1.0, 0.0, z, 1.0)).kind == IsometryKind::parabolic) ++parabolic_off_roots;
  }
  const auto [z0, z1] = parabolic_product_roots();
  const bool roots = z0 == Complex(0.0) && z1 == Complex(-2.0) &&
                     classify(c1 * Mobius(1.0, 0.0, z1, 1.0)).kind == IsometryKind::parabolic;
  return {worst <= 1e-12 && roots && parabolic_off_roots == 0,
          "max |tr - (2+2z)| " + fmt("%.1e", worst) + ", roots {0, -2}"};
}

Outcome seen_area_criterion() {
  const auto r = seen_area_inequality();
  const double expected = pi * (pi - 3.0) / (2.0 * (pi - 1.0));
  const double fmin = r.real("f_min");
  const double nmin = r.real("numeric_f_min");
  const bool ok = r.verdict == Verdict::pass && std::abs(fmin - expected) <= 1e-9 &&
                  std::abs(nmin - expected) <= 1e-9 && fmin > 0.0 && std::abs(fmin - 0.10385412) < 5e-9;
  return {ok, "min " + fmt("%.9f", fmin) + " at t = " + fmt("%.9f", r.real("t_min"))};
}

Outcome straddle_criterion() {
  double worst = 0.0;
  std::vector<double> grid;
  for (int i = 0; i < 50; ++i) grid.push_back(4.0 * (i + 1) / 50.0);
  const auto numeric = straddle_scan(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double a = grid[i];
    const double closed = a >= 2.0 * sqrt2 ? std::sqrt(1.0 - 4.0 / (a * a)) : std::sqrt(1.0 - a * a / 16.0);
    worst = std::max(worst, std::abs(numeric[i] - closed));
  }
  const double a = 2.0 * sqrt2;
  const double upper = std::sqrt(1.0 - 4.0 / (a * a));
  const double lower = std::sqrt(1.0 - a * a / 16.0);
  const double num = straddle_min_height_numeric(a);
  const bool ok = worst <= 1e-6 && std::abs(upper - sqrt2 / 2) < 1e-12 && std::abs(lower - sqrt2 / 2) < 1e-12 &&
                  std::abs(num - sqrt2 / 2) <= 1e-6;
  return {ok, "50-point grid max diff " + fmt("%.2e", worst) + ", at 2 sqrt 2: " + fmt("%.9f", num)};
}

Outcome packing_criterion() {
  const bool exact = tangent_product(2.0, 2.0, 0.0) == 4.0 && tangent_product(1.0, 4.0, 0.0) == 4.0;
  Sampler rng(1004);
  double drift = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double d = rng.uniform(-3.0, 3.0);
    drift = std::max(drift, std::abs(tangent_product(1.0 * std::exp(-d), 4.0 * std::exp(d), 0.0) - 4.0));
    drift = std::max(drift, std::abs(tangent_product(2.0 * std::exp(d), 2.0 * std::exp(-d), 0.0) - 4.0));
  }
  int violations = 0, mismatches = 0, equalities = 0;
  for (int i = 0; i < 1000; ++i) {
    // Every other lattice is rectangular so the orthogonal case is exercised.
    const Complex t1 = rng.in_annulus(0.5, 3.0);
    const Complex t2 = (i % 2 == 0) ? t1 * Complex(0.0, rng.uniform(0.3, 3.0)) : rng.in_annulus(0.5, 3.0);
    const CuspLattice lattice(t1, t2);
    int p1, q1, p2, q2;
    if (i % 4 == 0) {
      p1 = 1, q1 = 0, p2 = 0, q2 = 1;
    } else {
      do {
        p1 = rng.uniform_int(-4, 4), q1 = rng.uniform_int(-4, 4);
      } while (std::gcd(p1, q1) != 1);
      do {
        p2 = rng.uniform_int(-4, 4), q2 = rng.uniform_int(-4, 4);
      } while (std::gcd(p2, q2) != 1);
    }
    const auto r = intersection_area_bound(make_horocycle(lattice, p1, q1), make_horocycle(lattice, p2, q2),
                                           lattice);
    if (r.verdict != Verdict::pass) ++violations;
    const Complex v1 = double(p1) * t1 + double(q1) * t2;
    const Complex v2 = double(p2) * t1 + double(q2) * t2;
    const bool orthogonal = std::abs((std::conj(v1) * v2).real()) <= 1e-12 * std::abs(v1) * std::abs(v2) &&
                            (p1 * q2 - p2 * q1) != 0;
    const bool equality = r.real("equality") == 1.0;
    if (equality) ++equalities;
    if (equality != orthogonal) ++mismatches;
  }
  return {exact && drift <= 1e-12 && violations == 0 && mismatches == 0 && equalities > 0,
          "flow drift " + fmt("%.1e", drift) + ", 1000 lattices: " + std::to_string(violations) +
              " violations, " + std::to_string(equalities) + " equality cases, " + std::to_string(mismatches) +
              " equality/orthogonality mismatches"};
}

Outcome orbit_criterion() {
  const auto lib = orbit_enumerate(rigid_pants_group(), 0.05, 8);
  auto brute = oracle::brute_orbit({{1.0, 2.0, 0.0, 1.0}, {1.0, 0.0, -2.0, 1.0}}, 2.0, 2.0, 0.05, 8);
  std::sort(brute.begin(), brute.end(), [](const oracle::Ball& x, const oracle::Ball& y) {
    if (x.at_infinity != y.at_infinity) return x.at_infinity;
    if (std::abs(x.size - y.size) > 1e-9) return x.size > y.size;
    if (std::abs(x.re - y.re) > 1e-9) return x.re < y.re;
    return x.im < y.im;
  });
  bool same = lib.balls.size() == brute.size();
  for (std::size_t i = 0; same && i < brute.size(); ++i) {
    const auto& b = lib.balls[i].ball;
    if (b.at_infinity() != brute[i].at_infinity || std::abs(b.size() - brute[i].size) > 1e-9) same = false;
    if (same && !b.at_infinity()) {
      same = std::abs(b.center().value() - Complex(brute[i].re, brute[i].im)) <= 1e-9;
    }
  }
  return {same, std::to_string(lib.balls.size()) + " balls, brute force " + std::to_string(brute.size())};
}

int run_cli(const std::string& args) {
  const std::string cmd = "\"" + g_cli.string() + "\" " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome determinism_criterion() {
  std::filesystem::create_directories(g_scratch);
  const auto r1 = g_scratch / "report_1.json";
  const auto r2 = g_scratch / "report_2.json";
  const auto svg_dir = g_scratch / "svg";
  const int s1 = run_cli("verify --claims all --report \"" + r1.string() + "\" --svg-dir \"" +
                         svg_dir.string() + "\"");
  const int s2 = run_cli("verify --claims all --report \"" + r2.string() + "\"");
  const std::string a = testutil::slurp(r1), b = testutil::slurp(r2);
  const bool identical = !a.empty() && a == b;
  const bool svg_ok = testutil::svg_structure_matches(testutil::slurp(svg_dir / "eq2_orbit.svg"),
                                                      testutil::slurp(g_source / "tests/golden/eq2_orbit.svg"));
  return {s1 == 0 && s2 == 0 && identical && svg_ok,
          std::string("exit codes ") + std::to_string(s1) + "/" + std::to_string(s2) + ", reports " +
              (identical ? "identical" : "differ") + ", svg " + (svg_ok ? "matches golden" : "mismatch")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: hypants_acceptance <hypants-cli> <source-dir> <scratch-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_source = argv[2];
  g_scratch = argv[3];

  const std::vector<Criterion> criteria{
      {"whitehead-volume", 1.0, whitehead_volume_criterion},
      {"index-argument", 1.0, index_criterion},
      {"relation-suite", 5.0, relation_criterion},
      {"classifier-round-trip", 10.0, classifier_criterion},
      {"trace-law", 0.0, trace_criterion},
      {"seen-area-quadratic", 0.0, seen_area_criterion},
      {"straddle-geometry", 0.0, straddle_criterion},
      {"packing-lemmas", 0.0, packing_criterion},
      {"orbit-oracle-equivalence", 30.0, orbit_criterion},
      {"determinism", 0.0, determinism_criterion},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = out.ok;
    std::string detail = out.detail;
    if (c.time_limit > 0.0 && secs >= c.time_limit) {
      ok = false;
      detail += ", over the " + fmt("%.0f", c.time_limit) + " s limit";
    }
    if (!ok) ++failures;
    std::printf("%s  %-26s %8.3f s  %s\n", ok ? "PASS" : "FAIL", c.name.c_str(), secs, detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
