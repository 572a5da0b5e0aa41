#ifndef BITENSION_MAP_HPP
#define BITENSION_MAP_HPP

#include <string>
#include <vector>

#include "bitension/grid.hpp"
#include "bitension/metric.hpp"
#include "bitension/smooth_fn.hpp"

namespace bitension {

/// Rotationally symmetric map (r, theta) -> (rho(r), c r + k theta + a2)
/// between warped-product surfaces.
struct RotSymMap {
  SmoothFn profile; // rho
  double c = 0.0;
  double k = 1.0;
  double a2 = 0.0;
  WarpedMetric domain;
  WarpedMetric target;
};

enum class Route { simplified, term_sum };
enum class Verdict { harmonic, proper_biharmonic, neither };

std::string to_string(Route r);
std::string to_string(Verdict v);

/// Tension pair and bitension residual pair at a radial point.
struct FieldSample {
  double r = 0;
  double x = 0, y = 0;       // tension components tau^1, tau^2
  double res1 = 0, res2 = 0; // bitension residuals
};

struct ResidualReport {
  GridSpec grid;
  std::vector<FieldSample> samples;
  double sup_tension = 0;  // max over grid of max(|x|, |y|)
  double sup_residual = 0; // max over grid of max(|res1|, |res2|)
  Route route = Route::simplified;
  Verdict verdict = Verdict::neither;
};

/// Sup-norm thresholds behind the harmonic / proper-biharmonic verdicts.
struct VerdictThresholds {
  double harmonic = 1e-8;
  double biharmonic = 1e-8;
};

Verdict classify_verdict(double sup_tension, double sup_residual,
                         VerdictThresholds t = {});

} // namespace bitension

#endif
