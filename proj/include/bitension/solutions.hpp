#ifndef BITENSION_SOLUTIONS_HPP
#define BITENSION_SOLUTIONS_HPP

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "bitension/bitension.hpp"
#include "bitension/map.hpp"
#include "bitension/numerics.hpp"

namespace bitension {

// ---- quadrature-built biharmonic profiles ----

/// Profile obtained from the nested integral
///   rho(r) = Int { [ Int (C1 sigma Int dr/sigma + C2 sigma) dr + C3 ] / sigma } dr + C4,
/// together with the tension component x = C1 Int dr/sigma + C2. The map with
/// this profile (and constant angular image) is biharmonic by construction,
/// proper exactly when C1^2 + C2^2 != 0.
struct QuadratureSolution {
  NumericProfile rho;
  std::vector<double> rho_prime_values; // exact: the outer integrand
  std::vector<double> x_values;
  bool proper = false;
};

QuadratureSolution build_quadrature_profile(const SmoothFn& sigma, double C1,
                                            double C2, double C3, double C4,
                                            const GridSpec& grid,
                                            double base = M_PI / 2,
                                            QuadratureOptions opt = {});

/// Variant with the angular factor k theta + a2: the middle integrand gains
/// the k^2 C0 / sigma term (target warp^2 = 2 C0 rho + C).
QuadratureSolution build_p11_profile(const SmoothFn& sigma, double C0,
                                     double C1, double C2, double C3,
                                     double C4, double k, const GridSpec& grid,
                                     double base = M_PI / 2,
                                     QuadratureOptions opt = {});

// ---- closed-form profiles ----

/// rho(r) = (1/4)(ln tan(r/2))^2 - ln sin r + 1 on (0, pi), with hand-coded
/// derivatives. Target warp^2 = rho + 1; the map (rho(r), theta) is proper
/// biharmonic with tension x identically 1.
SmoothFn pb_profile();
RotSymMap pb_map();

/// General solution family for sphere -> quadratic-warp targets
/// (warp^2 = rho^2 + 2 C0 rho + C):
///   rho(r) = (C1-C2+C3) cot(r/2) + (2 C1 ln tan(r/2) + C4) tan(r/2)
///            - (C1 tan(r/2) + C2 cot(r/2)) ln(1 + tan^2(r/2)) - C0.
/// No absolute values needed: tan(r/2) > 0 on (0, pi).
SmoothFn mv_profile(double C0, double C1, double C2, double C3, double C4);

/// Same profile in the variable t = ln tan(r/2) (used for cross-checks).
SmoothFn mv_profile_t(double C0, double C1, double C2, double C3, double C4);

/// The full map; C is the free constant in the target warp (solution does not
/// depend on it). Requires warp^2 > 0 over the profile's range.
RotSymMap mv_map(double C0, double C1, double C2, double C3, double C4,
                 double C);

/// Variation-of-parameters data for the t-space profile ODE
/// rho_tt - rho = 4 e^{2t} (C1 e^{-t} + C2 e^t)/(1+e^{2t})^2 + C0.
struct VPSample {
  double u1p = 0, u2p = 0; // integrand forms
  double u1 = 0, u2 = 0;   // integrated forms
};
VPSample variation_of_parameters_check(double C0, double C1, double C2,
                                       double t);

/// rho(t) assembled as C3 e^{-t} + C4 e^t + u1 e^{-t} + u2 e^t.
double vp_assembled_rho(double C0, double C1, double C2, double C3, double C4,
                        double t);

/// Sphere-to-sphere map (a r + a1, k theta).
RotSymMap f_k_map(double a, double a1, double k);

/// Flat-torus-to-sphere map with constant profile rho0 and angle kappa theta.
RotSymMap torus_map(double rho0, double kappa);

// ---- named catalog ----

struct MapParams {
  std::optional<double> a, a1, k, c, kappa;
  std::optional<double> C0, C1, C2, C3, C4, A, C;
};

struct CatalogEntry {
  std::string name;
  RotSymMap map;
  GridSpec grid;      // verification grid (margin chosen for fp conditioning)
  Verdict expected;
};

std::vector<std::string> catalog_names();
CatalogEntry make_catalog_entry(const std::string& name,
                                const MapParams& params = {});

} // namespace bitension

#endif
