#include "bitension/solutions.hpp"

#include <algorithm>
#include <cmath>

namespace bitension {

namespace {

QuadratureSolution build_nested(const SmoothFn& sigma, double C0, double C1,
                                double C2, double C3, double C4, double k,
                                const GridSpec& grid, double base,
                                QuadratureOptions opt) {
  grid.validate();
  Antiderivative inv_sigma([&sigma](double r) { return 1.0 / sigma(r); }, grid,
                           base, opt);
  const double k2C0 = k * k * C0;
  auto inner = [&](double r) {
    double v = C1 * sigma(r) * inv_sigma(r) + C2 * sigma(r);
    if (k2C0 != 0.0) v += k2C0 / sigma(r);
    return v;
  };
  Antiderivative mid(inner, grid, base, opt);
  auto outer = [&](double r) { return (mid(r) + C3) / sigma(r); };
  NumericProfile rho = antiderivative_on_grid(outer, grid, base, opt);

  std::vector<double> values = rho.values();
  for (double& v : values) v += C4;

  QuadratureSolution out{NumericProfile(grid, std::move(values)), {}, {},
                         false};
  out.rho_prime_values.resize(grid.n);
  out.x_values.resize(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) {
    out.rho_prime_values[i] = outer(grid.point(i));
    out.x_values[i] = C1 * inv_sigma.checkpoint_values()[i] + C2;
  }
  out.proper = C1 * C1 + C2 * C2 != 0.0;
  return out;
}

} // namespace

QuadratureSolution build_quadrature_profile(const SmoothFn& sigma, double C1,
                                            double C2, double C3, double C4,
                                            const GridSpec& grid, double base,
                                            QuadratureOptions opt) {
  return build_nested(sigma, 0.0, C1, C2, C3, C4, 1.0, grid, base, opt);
}

QuadratureSolution build_p11_profile(const SmoothFn& sigma, double C0,
                                     double C1, double C2, double C3,
                                     double C4, double k, const GridSpec& grid,
                                     double base, QuadratureOptions opt) {
  return build_nested(sigma, C0, C1, C2, C3, C4, k, grid, base, opt);
}

SmoothFn pb_profile() {
  // rho = (1/4) T^2 - ln sin r + 1 with T = ln tan(r/2). Derivatives written
  // over s = sin r, c = cos r (T' = 1/s):
  //   rho'    = (T/2 - c)/s
  //   rho''   = (3 - T c)/(2 s^2)
  //   rho'''  = (T (1 + c^2) - 7 c)/(2 s^3)
  //   rho'''' = (8 + 15 c^2 - T (5 c + c^3))/(2 s^4)
  return SmoothFn(
      {0.0, M_PI},
      [](double r) {
        const double T = std::log(std::tan(0.5 * r));
        return 0.25 * T * T - std::log(std::sin(r)) + 1.0;
      },
      [](double r) {
        const double T = std::log(std::tan(0.5 * r));
        const double s = std::sin(r), c = std::cos(r);
        return (0.5 * T - c) / s;
      },
      [](double r) {
        const double T = std::log(std::tan(0.5 * r));
        const double s = std::sin(r), c = std::cos(r);
        return (3.0 - T * c) / (2.0 * s * s);
      },
      [](double r) {
        const double T = std::log(std::tan(0.5 * r));
        const double s = std::sin(r), c = std::cos(r);
        return (T * (1.0 + c * c) - 7.0 * c) / (2.0 * s * s * s);
      },
      [](double r) {
        const double T = std::log(std::tan(0.5 * r));
        const double s = std::sin(r), c = std::cos(r);
        const double s2 = s * s;
        return (8.0 + 15.0 * c * c - T * (5.0 * c + c * c * c)) /
               (2.0 * s2 * s2);
      },
      "pb");
}

RotSymMap pb_map() {
  return {pb_profile(), 0.0, 1.0, 0.0, WarpedMetric::sphere(),
          WarpedMetric::quadratic(0.0, 0.5, 1.0, /*ref=*/1.0)};
}

SmoothFn mv_profile_t(double C0, double C1, double C2, double C3, double C4) {
  const double P = C1 - C2 + C3;
  SmoothFn em = fns::exponential(-1.0);
  SmoothFn ep = fns::exponential(1.0);
  SmoothFn part = scale(P, em) + fns::linear(2.0 * C1, C4) * ep -
                  (scale(C1, ep) + scale(C2, em)) * fns::softplus_2t();
  return shift(-C0, part);
}

SmoothFn mv_profile(double C0, double C1, double C2, double C3, double C4) {
  return compose(mv_profile_t(C0, C1, C2, C3, C4), fns::log_tan_half());
}

RotSymMap mv_map(double C0, double C1, double C2, double C3, double C4,
                 double C) {
  // The target interval must hold the realized profile range; ref at
  // rho(pi/2) anchors the right component of {warp^2 > 0}.
  SmoothFn rho = mv_profile(C0, C1, C2, C3, C4);
  return {rho, 0.0, 1.0, 0.0, WarpedMetric::sphere(),
          WarpedMetric::quadratic(1.0, C0, C, rho(M_PI / 2))};
}

namespace {

double softplus2(double t) {
  return t > 0 ? 2.0 * t + std::log1p(std::exp(-2.0 * t))
               : std::log1p(std::exp(2.0 * t));
}

} // namespace

VPSample variation_of_parameters_check(double C0, double C1, double C2,
                                       double t) {
  const double e2t = std::exp(2.0 * t);
  const double den = 1.0 + e2t;
  const double et = std::exp(t), emt = std::exp(-t);
  VPSample s;
  s.u1p = -C1 * 2.0 * e2t / (den * den) - C2 * 2.0 * e2t * e2t / (den * den) -
          0.5 * C0 * et;
  s.u2p = 2.0 * C1 / (den * den) + C2 * 2.0 * e2t / (den * den) +
          0.5 * C0 * emt;
  const double L = softplus2(t);
  s.u1 = C1 / den - C2 / den - C2 * L - 0.5 * C0 * et;
  s.u2 = 2.0 * C1 * t + C1 / den - C1 * L - C2 / den - 0.5 * C0 * emt;
  return s;
}

double vp_assembled_rho(double C0, double C1, double C2, double C3, double C4,
                        double t) {
  const VPSample s = variation_of_parameters_check(C0, C1, C2, t);
  const double et = std::exp(t), emt = std::exp(-t);
  return C3 * emt + C4 * et + s.u1 * emt + s.u2 * et;
}

RotSymMap f_k_map(double a, double a1, double k) {
  return {fns::linear(a, a1), 0.0, k, 0.0, WarpedMetric::sphere(),
          WarpedMetric::sphere()};
}

RotSymMap torus_map(double rho0, double kappa) {
  return {fns::constant(rho0), 0.0, kappa, 0.0,
          WarpedMetric::flat_torus_fiber(), WarpedMetric::sphere()};
}

namespace {

RotSymMap stereographic_map(bool north) {
  // north: rho = cot(r/2) (C3 = 1); south: rho = tan(r/2) (C4 = 1).
  SmoothFn rho = north ? mv_profile(0, 0, 0, 1, 0) : mv_profile(0, 0, 0, 0, 1);
  return {rho, 0.0, 1.0, 0.0, WarpedMetric::sphere(),
          WarpedMetric::flat_polar()};
}

constexpr double kSphereMargin = 1e-3;
constexpr double kPbMargin = 0.1;  // pb residual involves rho'''' ~ 1/sin^4 r
constexpr double kMvMargin = 0.2;  // cot(r/2) profiles are stiffer still

} // namespace

std::vector<std::string> catalog_names() {
  return {"identity-sphere",    "f-k",
          "torus-quarter-pi",   "pb",
          "mv",                 "example-cot",
          "stereographic-north", "stereographic-south"};
}

CatalogEntry make_catalog_entry(const std::string& raw_name,
                                const MapParams& p) {
  std::string name = raw_name;
  std::replace(name.begin(), name.end(), '_', '-');

  const GridSpec sphere_grid{0.0, M_PI, 2001, kSphereMargin};
  const GridSpec pb_grid{0.0, M_PI, 2001, kPbMargin};
  const GridSpec mv_grid{0.0, M_PI, 2001, kMvMargin};
  const GridSpec torus_grid{0.0, 2.0 * M_PI, 2001, 0.0};

  if (name == "identity-sphere")
    return {name, f_k_map(1.0, 0.0, 1.0), sphere_grid, Verdict::harmonic};

  if (name == "f-k") {
    const double a = p.a.value_or(2.0);
    const double a1 = p.a1.value_or(0.0);
    const double k = p.k.value_or(1.0);
    RotSymMap map = f_k_map(a, a1, k);
    map.c = p.c.value_or(0.0);
    const bool harmonic = map.c == 0.0 && a * a == 1.0 && k * k == 1.0 &&
                          (a1 == 0.0 || a1 == M_PI);
    return {name, map, sphere_grid,
            harmonic ? Verdict::harmonic : Verdict::neither};
  }

  if (name == "torus-quarter-pi")
    return {name, torus_map(M_PI / 4, p.kappa.value_or(1.0)), torus_grid,
            Verdict::proper_biharmonic};

  if (name == "pb") return {name, pb_map(), pb_grid, Verdict::proper_biharmonic};

  if (name == "mv" || name == "example-cot") {
    double C0 = p.C0.value_or(0.0), C1 = p.C1.value_or(0.0),
           C2 = p.C2.value_or(0.0), C3 = p.C3.value_or(0.0),
           C4 = p.C4.value_or(0.0);
    if (name == "mv" && !p.C0 && !p.C1 && !p.C2 && !p.C3 && !p.C4) {
      // a representative proper-biharmonic member
      C0 = 0.3, C1 = 0.7, C2 = -0.4, C3 = 1.1, C4 = 0.5;
    }
    if (name == "example-cot") C2 = p.C2.value_or(-1.0);
    const double C = p.C.value_or(C0 * C0 + 1.5);
    const bool proper = C1 * C1 + C2 * C2 != 0.0;
    return {name, mv_map(C0, C1, C2, C3, C4, C), mv_grid,
            proper ? Verdict::proper_biharmonic : Verdict::harmonic};
  }

  if (name == "stereographic-north")
    return {name, stereographic_map(true), mv_grid, Verdict::harmonic};
  if (name == "stereographic-south")
    return {name, stereographic_map(false), mv_grid, Verdict::harmonic};

  throw ConfigError("unknown catalog map '" + raw_name + "'");
}

} // namespace bitension
