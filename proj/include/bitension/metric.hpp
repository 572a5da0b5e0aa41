#ifndef BITENSION_METRIC_HPP
#define BITENSION_METRIC_HPP

#include <string>

#include "bitension/smooth_fn.hpp"

namespace bitension {

/// Warped-product surface metric dr^2 + warp^2(r) dtheta^2 (or
/// drho^2 + warp^2(rho) dphi^2 on the target side). `interval` is where the
/// metric is geometrically valid (warp > 0); the warp function itself may be
/// evaluable on a larger set.
struct WarpedMetric {
  SmoothFn warp;
  Interval interval;
  std::string label;

  static WarpedMetric sphere(); // warp = sin on (0, pi)
  static WarpedMetric flat_torus_fiber(); // warp = 1
  static WarpedMetric flat_polar(); // warp(q) = q on (0, inf)

  /// warp^2 = A q^2 + 2 C0 q + C; the interval is the connected component of
  /// {warp^2 >= 1e-8} containing `ref`.
  static WarpedMetric quadratic(double A, double C0, double C,
                                double ref = 1.0);
};

/// The six connection coefficients at a point. For a warped product only
/// G1_22 = -w w' and G2_12 = w'/w survive; the rest vanish identically and
/// are kept so the zero pattern is visible to tests.
struct ChristoffelSet {
  double G1_11 = 0, G1_12 = 0, G1_22 = 0;
  double G2_11 = 0, G2_12 = 0, G2_22 = 0;
};

/// Nonzero Riemann components of a warped-product surface at a point:
/// R1_212 = -w w'', R1_221 = -R1_212, R2_112 = w''/w, R2_121 = -R2_112.
struct CurvatureSet {
  double R1_212 = 0, R1_221 = 0, R2_112 = 0, R2_121 = 0;
};

ChristoffelSet christoffel(const WarpedMetric& m, double at);
CurvatureSet curvature(const WarpedMetric& m, double at);

/// Gauss curvature K = -w''/w.
double gauss_curvature(const WarpedMetric& m, double at);

} // namespace bitension

#endif
