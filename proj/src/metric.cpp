#include "bitension/metric.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace bitension {

namespace {
constexpr double kWarpSqFloor = 1e-8;
}

WarpedMetric WarpedMetric::sphere() {
  return {fns::sine(), {0.0, M_PI}, "sphere"};
}

WarpedMetric WarpedMetric::flat_torus_fiber() {
  return {fns::constant(1.0), Interval::all(), "flat-torus"};
}

WarpedMetric WarpedMetric::flat_polar() {
  return {fns::linear(1.0, 0.0),
          {0.0, std::numeric_limits<double>::infinity()},
          "flat-polar"};
}

WarpedMetric WarpedMetric::quadratic(double A, double C0, double C,
                                     double ref) {
  auto Q = [A, C0, C](double q) { return (A * q + 2.0 * C0) * q + C; };
  if (!(Q(ref) >= kWarpSqFloor))
    throw ConfigError("WarpedMetric::quadratic: warp^2 < 1e-8 at ref point");

  const double inf = std::numeric_limits<double>::infinity();
  Interval iv{-inf, inf};
  if (A == 0.0) {
    if (C0 > 0.0)
      iv.lo = (kWarpSqFloor - C) / (2.0 * C0);
    else if (C0 < 0.0)
      iv.hi = (kWarpSqFloor - C) / (2.0 * C0);
    // C0 == 0: constant warp, whole line (C >= floor checked via ref)
  } else {
    const double disc = C0 * C0 - A * (C - kWarpSqFloor);
    if (disc > 0.0) {
      const double sq = std::sqrt(disc);
      const double q1 = (-C0 - sq) / A, q2 = (-C0 + sq) / A;
      const double rlo = std::min(q1, q2), rhi = std::max(q1, q2);
      if (A > 0.0) {
        // valid on the two outer rays; keep the one holding ref
        if (ref >= rhi)
          iv.lo = rhi;
        else
          iv.hi = rlo;
      } else {
        iv = {rlo, rhi};
      }
    } else if (A < 0.0) {
      throw ConfigError("WarpedMetric::quadratic: warp^2 never reaches 1e-8");
    }
  }
  return {fns::quadratic_warp(A, C0, C, iv), iv,
          "quadratic(A=" + std::to_string(A) + ")"};
}

namespace {

void check_interior(const WarpedMetric& m, double at, const char* who) {
  if (!m.interval.contains(at))
    throw DomainError(std::string(who) + ": point " + std::to_string(at) +
                      " outside metric interval of " + m.label);
}

} // namespace

ChristoffelSet christoffel(const WarpedMetric& m, double at) {
  check_interior(m, at, "christoffel");
  const double w = m.warp(at), w1 = m.warp.deriv(1, at);
  ChristoffelSet g;
  g.G1_22 = -w * w1;
  g.G2_12 = w1 / w;
  return g;
}

CurvatureSet curvature(const WarpedMetric& m, double at) {
  check_interior(m, at, "curvature");
  const double w = m.warp(at), w2 = m.warp.deriv(2, at);
  CurvatureSet c;
  c.R1_212 = -w * w2;
  c.R1_221 = w * w2;
  c.R2_112 = w2 / w;
  c.R2_121 = -w2 / w;
  return c;
}

double gauss_curvature(const WarpedMetric& m, double at) {
  check_interior(m, at, "gauss_curvature");
  const double w = m.warp(at);
  if (w == 0.0)
    throw PoleContactError("gauss_curvature: warp vanishes at " +
                           std::to_string(at));
  return -m.warp.deriv(2, at) / w;
}

} // namespace bitension
