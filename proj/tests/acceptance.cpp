// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each check pins its tolerance in code.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bitension/classify.hpp"
#include "bitension/solutions.hpp"
#include "oracles.hpp"

using namespace bitension;

namespace {

int failures = 0;

void report(int number, bool ok, const std::string& what,
            const std::string& detail) {
  std::printf("%s criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", number,
              what.c_str(), detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// 1. identity sphere map: sup(|x|,|y|,|res1|,|res2|) < 1e-10 on the dense grid
void criterion_1() {
  const GridSpec grid{0.0, M_PI, 2001, 1e-3};
  const ResidualReport rep = evaluate_grid(f_k_map(1.0, 0.0, 1.0), grid);
  const double sup = std::max(rep.sup_tension, rep.sup_residual);
  report(1, sup < 1e-10, "identity sphere map is flat harmonic",
         "sup = " + fmt(sup) + " < 1e-10");
}

// 2. doubled map tension: sup |x - 2 sin 2r| < 1e-9
void criterion_2() {
  const GridSpec grid{0.0, M_PI, 2001, 1e-3};
  const RotSymMap f2 = f_k_map(2.0, 0.0, 1.0);
  double worst = 0.0;
  for (double r : grid.points())
    worst = std::max(worst,
                     std::abs(tension(f2, r).first - 2.0 * std::sin(2.0 * r)));
  report(2, worst < 1e-9, "doubled-profile tension equals 2 sin 2r",
         "sup deviation = " + fmt(worst) + " < 1e-9");
}

// 3. torus constants rho = pi/4 and 3 pi/4: residual < 1e-12, |x| = 1/2
void criterion_3() {
  const GridSpec grid{0.0, 2.0 * M_PI, 2001, 0.0};
  bool ok = true;
  double worst_res = 0.0, worst_x = 0.0;
  for (double rho0 : {M_PI / 4, 3.0 * M_PI / 4}) {
    const SmoothFn rho = fns::constant(rho0);
    const RotSymMap map = torus_map(rho0, 1.0);
    for (double r : grid.points()) {
      worst_res = std::max(worst_res, std::abs(torus_residual(rho, 1.0, r)));
      worst_x =
          std::max(worst_x, std::abs(std::abs(tension(map, r).first) - 0.5));
    }
    ok = ok && evaluate_grid(map, grid).verdict == Verdict::proper_biharmonic;
  }
  ok = ok && worst_res < 1e-12 && worst_x < 1e-12;
  report(3, ok, "constant torus profiles pi/4, 3pi/4 are proper biharmonic",
         "sup |res| = " + fmt(worst_res) + " < 1e-12, sup ||x|-1/2| = " +
             fmt(worst_x));
}

// 4. route agreement on every catalog map at 50 random points
void criterion_4() {
  auto gen = oracle::rng(424242);
  double worst_rel = 0.0;
  for (const std::string& name : catalog_names()) {
    const CatalogEntry entry = make_catalog_entry(name);
    const double lo = entry.grid.point(0);
    const double hi = entry.grid.point(entry.grid.n - 1);
    for (int i = 0; i < 50; ++i) {
      const double r = oracle::uniform(gen, lo, hi);
      const auto [s1, s2] = bitension_residual_simplified(entry.map, r);
      const auto [t1, t2] = bitension_residual_termsum(entry.map, r);
      const double rel1 = std::abs(s1 - t1) /
                          std::max(1e-3, std::max(std::abs(s1), std::abs(t1)));
      const double gap1 = std::abs(s1 - t1);
      const double gap2 = std::abs(s2 - t2);
      if (std::max(std::abs(s1), std::abs(t1)) > 1e-3)
        worst_rel = std::max(worst_rel, rel1);
      if (gap1 > std::max(1e-12, 1e-9 * std::max(std::abs(s1), std::abs(t1))) ||
          gap2 > std::max(1e-12, 1e-9 * std::max(std::abs(s2), std::abs(t2)))) {
        report(4, false, "route agreement", name + " at r = " + fmt(r) +
                             ": gap " + fmt(std::max(gap1, gap2)));
        return;
      }
    }
  }
  report(4, true, "simplified and term-sum routes agree",
         "8 maps x 50 points, rel tol 1e-9 (abs floor 1e-12), worst rel = " +
             fmt(worst_rel));
}

// 5. pb map: sup residual < 1e-8, x = 1 within 1e-10, quadrature
//    reconstruction within 1e-6
void criterion_5() {
  const GridSpec grid{0.0, M_PI, 2001, 0.1};
  const ResidualReport rep = evaluate_grid(pb_map(), grid);
  double worst_x = 0.0;
  for (const auto& s : rep.samples)
    worst_x = std::max(worst_x, std::abs(s.x - 1.0));

  const GridSpec qgrid{0.0, M_PI, 501, 0.1};
  const QuadratureSolution sol = build_p11_profile(
      fns::sine({0.0, M_PI}), 0.5, 0.0, 1.0, 0.0, 1.0, 1.0, qgrid);
  const SmoothFn pb = pb_profile();
  double worst_q = 0.0;
  for (std::size_t i = 0; i < qgrid.n; ++i)
    worst_q = std::max(worst_q,
                       std::abs(sol.rho.value(i) - pb(qgrid.point(i))));

  const bool ok = rep.sup_residual < 1e-8 && worst_x < 1e-10 && worst_q < 1e-6;
  report(5, ok, "pb map is proper biharmonic with x = 1",
         "sup res = " + fmt(rep.sup_residual) + " < 1e-8, sup |x-1| = " +
             fmt(worst_x) + " < 1e-10, reconstruction = " + fmt(worst_q) +
             " < 1e-6");
}

// 6. mv family: 10 random admissible tuples, verdict proper iff C1^2+C2^2 != 0;
//    stereographic members harmonic with sup tension < 1e-10
void criterion_6() {
  auto gen = oracle::rng(606060);
  const GridSpec grid{0.0, M_PI, 1001, 0.2};
  bool ok = true;
  std::string detail;
  double worst_res = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const double C0 = oracle::uniform(gen, -2, 2);
    double C1 = oracle::uniform(gen, -2, 2);
    double C2 = oracle::uniform(gen, -2, 2);
    const double C3 = oracle::uniform(gen, -2, 2);
    const double C4 = oracle::uniform(gen, -2, 2);
    if (trial >= 8) C1 = C2 = 0.0; // exercise the harmonic branch
    const double C = C0 * C0 + 1.0 + oracle::uniform(gen, 0.0, 2.0);
    const ResidualReport rep =
        evaluate_grid(mv_map(C0, C1, C2, C3, C4, C), grid);
    worst_res = std::max(worst_res, rep.sup_residual);
    const Verdict expected = C1 * C1 + C2 * C2 != 0.0
                                 ? Verdict::proper_biharmonic
                                 : Verdict::harmonic;
    if (rep.sup_residual >= 1e-8 || rep.verdict != expected) {
      ok = false;
      detail = "tuple " + std::to_string(trial) + " res " +
               fmt(rep.sup_residual) + " verdict " + to_string(rep.verdict);
      break;
    }
  }
  double worst_stereo = 0.0;
  for (const char* name : {"stereographic-north", "stereographic-south"}) {
    const CatalogEntry entry = make_catalog_entry(name);
    worst_stereo = std::max(worst_stereo,
                            evaluate_grid(entry.map, entry.grid).sup_tension);
  }
  ok = ok && worst_stereo < 1e-10;
  if (detail.empty())
    detail = "sup res = " + fmt(worst_res) +
             " < 1e-8, stereographic sup tension = " + fmt(worst_stereo) +
             " < 1e-10";
  report(6, ok, "mv family solves the system, proper iff C1^2+C2^2 != 0",
         detail);
}

// 7. default sweep: harmonic exactly on {(+-1,+-1,0),(+-1,+-1,pi)}, nothing
//    proper biharmonic; bridge identity res1 * 2 sin^4 r = f(r)
void criterion_7() {
  const GridSpec grid{0.0, M_PI, 2001, 1e-3};
  const SweepReport rep = classify_sweep(SweepRanges{}, grid, true);

  std::set<std::array<double, 3>> harmonic, expected;
  bool none_proper = true;
  for (const auto& row : rep.rows) {
    if (row.verdict == Verdict::harmonic) harmonic.insert({row.a, row.k, row.a1});
    none_proper = none_proper && row.verdict != Verdict::proper_biharmonic;
  }
  for (double a : {-1.0, 1.0})
    for (double k : {-1.0, 1.0})
      for (double a1 : {0.0, M_PI}) expected.insert({a, k, a1});

  double worst_bridge = 0.0;
  for (const auto& row : rep.rows) {
    const RotSymMap map = f_k_map(row.a, row.a1, row.k);
    for (std::size_t i = 0; i < grid.n; i += 8) {
      const double r = grid.point(i);
      const double s = std::sin(r);
      const double res1 = bitension_residual_simplified(map, r).first;
      const double f = obstruction(row.a, row.k, row.a1, r).f;
      worst_bridge =
          std::max(worst_bridge, std::abs(res1 * 2.0 * s * s * s * s - f));
    }
  }

  const bool ok = harmonic == expected && none_proper && worst_bridge < 1e-9;
  report(7, ok, "classification sweep matches the theorem",
         std::to_string(harmonic.size()) +
             " harmonic tuples (expect 8), none proper, bridge sup = " +
             fmt(worst_bridge) + " < 1e-9");
}

// 8. cubic certificate
void criterion_8() {
  const CaseIIResult r = case_ii_analysis();
  const bool ok = r.no_positive_root &&
                  std::abs(r.phi_at_t_star - r.phi_closed_form) < 1e-12 &&
                  std::abs(r.phi_at_t_star - 0.98094) < 1e-4;
  report(8, ok, "elimination cubic has no positive root",
         "brackets on [0,1e6]: " + std::to_string(r.bracket_count) +
             ", phi(t*) = " + fmt(r.phi_at_t_star) + ", |direct - closed| = " +
             fmt(std::abs(r.phi_at_t_star - r.phi_closed_form)));
}

// 9. flat-polar quadrature profiles fit {r^2 ln r, r^2, ln r, 1}
void criterion_9() {
  const SmoothFn sigma_r = fns::linear(1.0, 0.0, {0.0, 1e9});
  const GridSpec grid{0.5, 3.0, 201, 0.0};
  const std::vector<std::function<double(double)>> basis{
      [](double r) { return r * r * std::log(r); },
      [](double r) { return r * r; },
      [](double r) { return std::log(r); },
      [](double) { return 1.0; }};
  auto gen = oracle::rng(909090);
  double worst = 0.0;
  for (int trial = 0; trial < 3; ++trial) {
    const QuadratureSolution sol = build_quadrature_profile(
        sigma_r, oracle::uniform(gen, -2, 2), oracle::uniform(gen, -2, 2),
        oracle::uniform(gen, -2, 2), oracle::uniform(gen, -2, 2), grid);
    worst = std::max(worst, oracle::basis_fit_residual(
                                grid.points(), sol.rho.values(), basis));
  }
  report(9, worst < 1e-6, "flat-polar profiles live in the expected basis",
         "worst fit residual = " + fmt(worst) + " < 1e-6");
}

// 10. Gauss curvature: -w''/w vs (C0^2 - C)/w^4 on random quadratic warps
void criterion_10() {
  auto gen = oracle::rng(101010);
  double worst = 0.0;
  int accepted = 0;
  while (accepted < 20) {
    const double C0 = oracle::uniform(gen, -1.5, 1.5);
    const double C = oracle::uniform(gen, -1.0, 3.0);
    const double q = oracle::uniform(gen, -2.0, 2.0);
    const double wsq = q * q + 2.0 * C0 * q + C;
    if (wsq < 0.1) continue;
    ++accepted;
    const WarpedMetric m = WarpedMetric::quadratic(1.0, C0, C, q);
    const double closed = (C0 * C0 - C) / (wsq * wsq);
    worst = std::max(worst, std::abs(gauss_curvature(m, q) - closed));
  }
  report(10, worst < 1e-9, "curvature routes agree on quadratic warps",
         "worst |direct - closed| = " + fmt(worst) + " < 1e-9");
}

} // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures == 0)
    std::printf("all %d acceptance criteria passed\n", 10);
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
