#ifndef BITENSION_CLASSIFY_HPP
#define BITENSION_CLASSIFY_HPP

#include <cmath>
#include <vector>

#include "bitension/bitension.hpp"
#include "bitension/map.hpp"

namespace bitension {

/// Obstruction function of the linear-profile sphere map (a r + a1, k theta):
///   f(r) = a sin 2r + (2k^2a^2 - 3k^2) sin 2rho - (2k^2a^2 + k^2) cos 2r sin 2rho
///          + 2k^2 a sin 2r cos 2rho + k^4 sin 2rho cos 2rho,  rho = a r + a1.
/// The map is biharmonic iff f vanishes identically; res1 * 2 sin^4 r = f(r).
struct ObstructionEval {
  double a = 0, k = 0, a1 = 0, r = 0;
  double f = 0, f1 = 0, f2 = 0, f3 = 0; // f and derivatives in r
};

ObstructionEval obstruction(double a, double k, double a1, double r);

/// f, f', f'', f''' evaluated at r0 = pi/2 through their closed-form displays
/// in rho0 = a pi/2 + a1 (cross-checked against obstruction() in tests).
struct MidpointSystem {
  double rho0 = 0;
  double f = 0, f1 = 0, f2 = 0, f3 = 0;
};

MidpointSystem midpoint_system(double a, double k, double a1);

/// Case cos(rho0) != 0: the reduced system forces a^2 = 1/2 and then
/// k^4 = 16 a^4 - 8 a^2 - 1 = -1, so no real parameters exist.
struct CaseIResult {
  double a_sq = 0;             // positive root of 12 a^4 - 4 a^2 - 1
  double k4_required = 0;      // 16 a^4 - 8 a^2 - 1 at that root
  double k4_given = 0;         // (k^2)^2 for the queried k
  double first_eq_residual = 0; // k4_given - k4_required (> 0 for real k)
  double third_eq_residual = 0; // third display at a^2, k^4 = k4_required
  bool feasible = false;
};
CaseIResult case_i_analysis(double k_sq);

/// Case cos(rho0) = 0: (a^2, k^2) = (1, 1) solves the system; for a^2 != 1 the
/// elimination leads to the cubic phi(t) = 3t^3 + 13t^2 - t + 1 in t = k^2,
/// which is certified positive on [0, inf).
struct CaseIIResult {
  double t_star = 0;           // positive stationary point of the cubic
  double phi_at_t_star = 0;    // direct evaluation
  double phi_closed_form = 0;  // (4/243)(1247 - 89 sqrt(178))
  double phi_at_lo = 0, phi_at_hi = 0;
  std::size_t bracket_count = 0; // sign-change brackets on [0, 1e6]
  bool no_positive_root = false;
  bool identity_solves = false; // (a^2, k^2) = (1, 1) satisfies both displays
};
CaseIIResult case_ii_analysis();

/// a^2 = (k^2 + 1)/(3k^4 - 2k^2 + 1), the elimination step for a^2 != 1.
double case_ii_a_sq(double k_sq);

/// Residuals of the two reduced midpoint equations at (a^2, k^2).
std::pair<double, double> case_ii_system_residual(double a_sq, double k_sq);

// ---- parameter sweep ----

struct SweepRow {
  double a = 0, k = 0, a1 = 0;
  double sup_tension = 0;
  double sup_residual = 0;
  bool range_flag = false; // profile leaves (0, pi) somewhere on the grid
  Verdict verdict = Verdict::neither;
};

struct SweepReport {
  GridSpec grid;
  std::vector<SweepRow> rows;
  bool operator==(const SweepReport&) const = default;
};

inline bool operator==(const SweepRow& a, const SweepRow& b) {
  return a.a == b.a && a.k == b.k && a.a1 == b.a1 &&
         a.sup_tension == b.sup_tension && a.sup_residual == b.sup_residual &&
         a.range_flag == b.range_flag && a.verdict == b.verdict;
}

struct SweepRanges {
  std::vector<double> a{-3.0, -2.0, -1.5, -1.0, -0.5, -0.25,
                        0.25, 0.5,  1.0,  1.5,  2.0,  3.0};
  std::vector<double> k{-3.0, -2.0, -1.0, 1.0, 2.0, 3.0};
  std::vector<double> a1{0.0, M_PI / 4, M_PI / 2, M_PI};
};

/// Classification sweep over (a, k, a1) tuples of sphere-to-sphere maps.
/// Rows come out sorted by (a, k, a1) regardless of execution order; tuples
/// are independent and evaluated with OpenMP when parallel is set.
/// a = 0 is rejected (the classification requires a != 0).
SweepReport classify_sweep(const SweepRanges& ranges, const GridSpec& grid,
                           bool parallel = false,
                           VerdictThresholds thresholds = {});

} // namespace bitension

#endif
