#include "bitension/bitension.hpp"

#include <cmath>
#include <exception>
#include <string>

namespace bitension {

std::string to_string(Route r) {
  return r == Route::simplified ? "simplified" : "term-sum";
}

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::harmonic: return "harmonic";
  case Verdict::proper_biharmonic: return "proper-biharmonic";
  default: return "neither";
  }
}

Verdict classify_verdict(double sup_tension, double sup_residual,
                         VerdictThresholds t) {
  if (sup_tension < t.harmonic) return Verdict::harmonic;
  if (sup_residual < t.biharmonic) return Verdict::proper_biharmonic;
  return Verdict::neither;
}

WarpJet warp_jet(const SmoothFn& warp, double at) {
  return {warp(at), warp.deriv(1, at), warp.deriv(2, at), warp.deriv(3, at)};
}

namespace {

// Shared expression shapes for (f f')' and (f f')''. Both metric sides go
// through these so that equal input jets produce bit-equal values.
inline double ff_prime_d1(double d0, double d1, double d2) {
  return d1 * d1 + d0 * d2;
}
inline double ff_prime_d2(double d0, double d1, double d2, double d3) {
  return 3.0 * (d1 * d2) + d0 * d3;
}

} // namespace

FieldSample eval_point(double r, double c, double k, const WarpJet& s,
                       const Jet& p, const WarpJet& l, Route route) {
  if (s.w0 == 0.0)
    throw PoleContactError("eval_point: sigma vanishes at r = " +
                           std::to_string(r));

  const double S01 = s.w0 * s.w1;
  const double A1 = ff_prime_d1(s.w0, s.w1, s.w2);
  const double A2 = ff_prime_d2(s.w0, s.w1, s.w2, s.w3);
  const double L = l.w0 * l.w1; // lambda lambda'
  const double Lp = ff_prime_d1(l.w0, l.w1, l.w2);
  const double Ls = ff_prime_d2(l.w0, l.w1, l.w2, l.w3);

  const double sig2 = s.w0 * s.w0;
  const double sig3 = sig2 * s.w0;
  const double sig4 = sig2 * sig2;
  const double csq = c * c;
  const double W2 = csq * sig2 + k * k; // sigma^2 (c^2 + k^2/sigma^2)

  const double X = sig2 * p.d2 + S01 * p.d1 - W2 * L;
  const double X1 = sig2 * p.d3 + 3.0 * S01 * p.d2 + A1 * p.d1 -
                    2.0 * csq * S01 * L - W2 * (Lp * p.d1);
  const double X2 = sig2 * p.d4 + 5.0 * S01 * p.d3 + 4.0 * A1 * p.d2 +
                    A2 * p.d1 - 2.0 * csq * A1 * L -
                    4.0 * csq * S01 * Lp * p.d1 -
                    W2 * (Ls * p.d1 * p.d1 + Lp * p.d2);

  const double x = X / sig2;
  const double xp = X1 / sig2 - 2.0 * s.w1 * X / sig3;
  const double xpp = X2 / sig2 - 4.0 * s.w1 * X1 / sig3 +
                     (6.0 * s.w1 * s.w1 - 2.0 * s.w0 * s.w2) * X / sig4;

  const double u = s.w1 / s.w0;
  const double w = W2 / sig2;

  double y = 0.0, yp = 0.0, ypp = 0.0;
  double m = 0.0, mp = 0.0, mpp = 0.0;
  if (c != 0.0) {
    m = l.w1 / l.w0;
    mp = l.w2 / l.w0 - m * m;
    mpp = l.w3 / l.w0 - (l.w2 * l.w1) / (l.w0 * l.w0) - 2.0 * m * mp;
    const double up = s.w2 / s.w0 - u * u;
    const double upp = s.w3 / s.w0 - (s.w2 * s.w1) / (s.w0 * s.w0) - 2.0 * u * up;
    y = c * (2.0 * p.d1 * m + u);
    yp = c * (2.0 * (p.d2 * m + p.d1 * p.d1 * mp) + up);
    ypp = c * (2.0 * (p.d3 * m + 3.0 * p.d1 * p.d2 * mp +
                      p.d1 * p.d1 * p.d1 * mpp) +
               upp);
  }

  FieldSample out;
  out.r = r;
  out.x = x;
  out.y = y;

  if (route == Route::simplified) {
    out.res1 = xpp + u * xp - w * Lp * x - (2.0 * c * yp + y * y) * L;
    out.res2 = c == 0.0
                   ? 0.0
                   : c * ypp + y * yp + 2.0 * csq * m * xp +
                         2.0 * csq * (u * m + p.d1 * Lp / (l.w0 * l.w0)) * x;
    return out;
  }

  // Term-by-term route: the eleven coordinate expressions of the bitension
  // field, summed per target component.
  const double lam1sq = l.w1 * l.w1;
  const double lam02 = l.w0 * l.w2; // lambda lambda''

  double t1 = (xpp + u * xp)        // Delta tau^1
              - w * lam1sq * x      // GammaBar GammaBar, x part
              - w * lam02 * x;      // curvature, x part
  double t2 = 0.0;
  if (c != 0.0) {
    t1 += -2.0 * c * L * yp          // 2 g(grad tau, grad phi) GammaBar^1
          - c * u * L * y            // tau Delta phi GammaBar^1
          - c * p.d1 * Lp * y        // d GammaBar^1
          - c * p.d1 * lam1sq * y    // GammaBar GammaBar, y part
          + c * p.d1 * lam02 * y;    // curvature, y part

    const double lam2over = l.w2 / l.w0; // lambda''/lambda
    t2 = (ypp + u * yp)                                  // Delta tau^2
         + 2.0 * (c * xp + p.d1 * yp) * m                // 2 g(grad, grad)
         + m * (c * u * x + (p.d2 + u * p.d1) * y)       // tau Delta phi
         + c * p.d1 * mp * x + p.d1 * p.d1 * mp * y      // d GammaBar^2
         + c * p.d1 * m * m * x + p.d1 * p.d1 * m * m * y
         - w * lam1sq * y                                // GammaBar GammaBar
         + c * p.d1 * lam2over * x
         - p.d1 * p.d1 * lam2over * y;                   // curvature
  }
  out.res1 = t1;
  out.res2 = c * t2;
  return out;
}

namespace {

FieldSample eval_map_point(const RotSymMap& map, double r, Route route) {
  const WarpJet s = warp_jet(map.domain.warp, r);
  const Jet p = map.profile.jet(r);
  const WarpJet l = warp_jet(map.target.warp, p.v);
  return eval_point(r, map.c, map.k, s, p, l, route);
}

} // namespace

std::pair<double, double> tension(const RotSymMap& map, double r) {
  const FieldSample f = eval_map_point(map, r, Route::simplified);
  return {f.x, f.y};
}

std::pair<double, double> bitension_residual_simplified(const RotSymMap& map,
                                                        double r) {
  const FieldSample f = eval_map_point(map, r, Route::simplified);
  return {f.res1, f.res2};
}

std::pair<double, double> bitension_residual_termsum(const RotSymMap& map,
                                                     double r) {
  const FieldSample f = eval_map_point(map, r, Route::term_sum);
  return {f.res1, f.res2};
}

FieldSample evaluate_at(const RotSymMap& map, double r, Route route) {
  return eval_map_point(map, r, route);
}

ResidualReport evaluate_grid(const RotSymMap& map, const GridSpec& grid,
                             Route route, bool parallel,
                             VerdictThresholds thresholds) {
  grid.validate();
  ResidualReport rep;
  rep.grid = grid;
  rep.route = route;
  rep.samples.resize(grid.n);

  std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(static) if (parallel)
  for (long long i = 0; i < static_cast<long long>(grid.n); ++i) {
    try {
      rep.samples[static_cast<std::size_t>(i)] =
          eval_map_point(map, grid.point(static_cast<std::size_t>(i)), route);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);

  for (const FieldSample& f : rep.samples) {
    rep.sup_tension =
        std::max(rep.sup_tension, std::max(std::abs(f.x), std::abs(f.y)));
    rep.sup_residual = std::max(
        rep.sup_residual, std::max(std::abs(f.res1), std::abs(f.res2)));
  }
  rep.verdict = classify_verdict(rep.sup_tension, rep.sup_residual, thresholds);
  return rep;
}

double torus_residual(const Jet& p, double kappa) {
  const double k2 = kappa * kappa;
  return p.d4 - 2.0 * k2 * std::cos(2.0 * p.v) * p.d2 +
         2.0 * k2 * std::sin(2.0 * p.v) * p.d1 * p.d1 +
         0.25 * k2 * k2 * std::sin(4.0 * p.v);
}

double torus_residual(const SmoothFn& rho, double kappa, double r) {
  return torus_residual(rho.jet(r), kappa);
}

SphereSystemSample sphere_system_t(const RotSymMap& map, double t) {
  if (map.c != 0.0)
    throw ConfigError("sphere_system_t: requires c = 0");
  if (map.domain.label != "sphere" || map.target.label != "sphere")
    throw ConfigError("sphere_system_t: requires sphere domain and target");
  const SmoothFn in_t = compose(map.profile, fns::gudermann_angle());
  const Jet p = in_t.jet(t); // rho and t-derivatives

  const double k2 = map.k * map.k;
  const double ch = std::cosh(t);
  const double C = ch * ch, C1 = std::sinh(2.0 * t), C2 = 2.0 * std::cosh(2.0 * t);
  const double s2r = std::sin(2.0 * p.v), c2r = std::cos(2.0 * p.v);

  const double G = p.d2 - 0.5 * k2 * s2r;
  const double G1 = p.d3 - k2 * c2r * p.d1;
  const double G2 = p.d4 + 2.0 * k2 * s2r * p.d1 * p.d1 - k2 * c2r * p.d2;

  SphereSystemSample out;
  out.t = t;
  out.r = 2.0 * std::atan(std::exp(t));
  out.x = C * G;
  out.res = (C2 * G + 2.0 * C1 * G1 + C * G2) - k2 * out.x * c2r;
  return out;
}

double bienergy(const RotSymMap& map, const GridSpec& grid,
                QuadratureOptions opt) {
  grid.validate();
  auto integrand = [&map](double r) {
    const auto [x, y] = tension(map, r);
    const double sig = map.domain.warp(r);
    const double lam = map.target.warp(map.profile(r));
    return (x * x + lam * lam * y * y) * sig;
  };
  return M_PI * integrate(integrand, grid.point(0), grid.point(grid.n - 1), opt);
}

} // namespace bitension
