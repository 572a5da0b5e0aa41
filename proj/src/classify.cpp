#include "bitension/classify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "bitension/solutions.hpp"

namespace bitension {

ObstructionEval obstruction(double a, double k, double a1, double r) {
  const double rho = a * r + a1;
  const double s2r = std::sin(2.0 * r), c2r = std::cos(2.0 * r);
  const double s2p = std::sin(2.0 * rho), c2p = std::cos(2.0 * rho);
  const double s4p = std::sin(4.0 * rho), c4p = std::cos(4.0 * rho);
  const double k2 = k * k, k4 = k2 * k2;
  const double a2 = a * a, a3 = a2 * a, a4 = a2 * a2, a5 = a4 * a;

  ObstructionEval e;
  e.a = a;
  e.k = k;
  e.a1 = a1;
  e.r = r;

  e.f = a * s2r + (2.0 * k2 * a2 - 3.0 * k2) * s2p -
        (2.0 * k2 * a2 + k2) * c2r * s2p + 2.0 * k2 * a * s2r * c2p +
        k4 * s2p * c2p;

  e.f1 = 2.0 * a * c2r + 2.0 * a * (2.0 * k2 * a2 - 3.0 * k2) * c2p +
         2.0 * k2 * s2r * s2p + (2.0 * k2 * a - 4.0 * k2 * a3) * c2r * c2p +
         2.0 * k4 * a * c4p;

  e.f2 = -4.0 * a * s2r - 4.0 * a2 * (2.0 * k2 * a2 - 3.0 * k2) * s2p +
         (8.0 * k2 * a4 - 4.0 * k2 * a2 + 4.0 * k2) * c2r * s2p +
         8.0 * k2 * a3 * s2r * c2p - 8.0 * k4 * a2 * s4p;

  e.f3 = -8.0 * a * c2r - 8.0 * a3 * (2.0 * k2 * a2 - 3.0 * k2) * c2p +
         (-32.0 * k2 * a4 + 8.0 * k2 * a2 - 8.0 * k2) * s2r * s2p +
         (16.0 * k2 * a5 + 8.0 * k2 * a3 + 8.0 * k2 * a) * c2r * c2p -
         32.0 * k4 * a3 * c4p;
  return e;
}

MidpointSystem midpoint_system(double a, double k, double a1) {
  const double rho0 = a * M_PI / 2 + a1;
  const double sp = std::sin(rho0), cp = std::cos(rho0);
  const double c2p = std::cos(2.0 * rho0);
  const double k2 = k * k, k4 = k2 * k2;
  const double a2 = a * a, a4 = a2 * a2;

  MidpointSystem m;
  m.rho0 = rho0;
  m.f = 2.0 * k2 * sp * cp * (4.0 * a2 - 2.0 + k2 * c2p);
  m.f1 = 2.0 * a *
         (-1.0 - k4 + (4.0 * k2 * a2 - 4.0 * k2) * c2p + 2.0 * k4 * c2p * c2p);
  m.f2 = 8.0 * k2 * sp * cp *
         (-4.0 * a4 + 4.0 * a2 - 1.0 - 4.0 * k2 * a2 * c2p);
  m.f3 = 8.0 * a *
         (1.0 + (-4.0 * k2 * a4 + 2.0 * k2 * a2 - k2) * c2p -
          8.0 * k4 * a2 * c2p * c2p + 4.0 * k4 * a2);
  return m;
}

CaseIResult case_i_analysis(double k_sq) {
  CaseIResult r;
  // 12 t^2 - 4 t - 1 = 0, t = a^2: positive root (4 + sqrt(64))/24 = 1/2.
  r.a_sq = (4.0 + std::sqrt(16.0 + 48.0)) / 24.0;
  const double a2 = r.a_sq, a4 = a2 * a2, a6 = a4 * a2;
  r.k4_required = 16.0 * a4 - 8.0 * a2 - 1.0;
  r.k4_given = k_sq * k_sq;
  r.first_eq_residual = r.k4_given - r.k4_required;
  r.third_eq_residual =
      -112.0 * a6 + 112.0 * a4 - 24.0 * a2 - 1.0 + 4.0 * r.k4_required * a2;
  r.feasible = r.k4_required >= 0.0;
  return r;
}

double case_ii_a_sq(double k_sq) {
  return (k_sq + 1.0) / (3.0 * k_sq * k_sq - 2.0 * k_sq + 1.0);
}

std::pair<double, double> case_ii_system_residual(double a_sq, double k_sq) {
  const double k4 = k_sq * k_sq;
  const double e1 = 4.0 * k_sq * (a_sq - 1.0) - (k4 - 1.0);
  const double e2 = 4.0 * k_sq * a_sq * (a_sq - 1.0) -
                    (4.0 * k4 * a_sq - 2.0 * k_sq * a_sq - k_sq - 1.0);
  return {e1, e2};
}

CaseIIResult case_ii_analysis() {
  CaseIIResult r;
  const std::vector<double> phi{1.0, -1.0, 13.0, 3.0};
  r.t_star = (-13.0 + std::sqrt(178.0)) / 9.0;
  r.phi_at_t_star = polynomial_eval(phi, r.t_star);
  r.phi_closed_form = 4.0 / 243.0 * (1247.0 - 89.0 * std::sqrt(178.0));
  r.phi_at_lo = polynomial_eval(phi, 0.0);
  r.phi_at_hi = polynomial_eval(phi, 1e6);
  r.bracket_count = bracket_positive_roots(phi, 0.0, 1e6).size();
  r.no_positive_root = r.bracket_count == 0 && r.phi_at_lo > 0.0 &&
                       r.phi_at_hi > 0.0 && r.phi_at_t_star > 0.0;
  const auto [e1, e2] = case_ii_system_residual(1.0, 1.0);
  r.identity_solves = e1 == 0.0 && e2 == 0.0;
  return r;
}

SweepReport classify_sweep(const SweepRanges& ranges, const GridSpec& grid,
                           bool parallel, VerdictThresholds thresholds) {
  grid.validate();
  for (double a : ranges.a)
    if (a == 0.0) throw ConfigError("classify_sweep: a = 0 is excluded");
  if (ranges.a.empty() || ranges.k.empty() || ranges.a1.empty())
    throw ConfigError("classify_sweep: empty parameter range");

  std::vector<double> as = ranges.a, ks = ranges.k, a1s = ranges.a1;
  std::sort(as.begin(), as.end());
  std::sort(ks.begin(), ks.end());
  std::sort(a1s.begin(), a1s.end());

  std::vector<SweepRow> rows;
  rows.reserve(as.size() * ks.size() * a1s.size());
  for (double a : as)
    for (double k : ks)
      for (double a1 : a1s) rows.push_back({a, k, a1, 0, 0, false,
                                            Verdict::neither});

  std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long long i = 0; i < static_cast<long long>(rows.size()); ++i) {
    try {
      SweepRow& row = rows[static_cast<std::size_t>(i)];
      const RotSymMap map = f_k_map(row.a, row.a1, row.k);
      const ResidualReport rep =
          evaluate_grid(map, grid, Route::simplified, false, thresholds);
      row.sup_tension = rep.sup_tension;
      row.sup_residual = rep.sup_residual;
      row.verdict = rep.verdict;
      // linear profile: range over the grid is spanned by the endpoints
      const double r0 = grid.point(0), r1 = grid.point(grid.n - 1);
      const double p0 = row.a * r0 + row.a1, p1 = row.a * r1 + row.a1;
      const double pmin = std::min(p0, p1), pmax = std::max(p0, p1);
      row.range_flag = !(pmin > 0.0 && pmax < M_PI);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);

  return {grid, std::move(rows)};
}

} // namespace bitension
