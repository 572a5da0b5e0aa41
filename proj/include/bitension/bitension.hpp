#ifndef BITENSION_BITENSION_HPP
#define BITENSION_BITENSION_HPP

#include <utility>

#include "bitension/map.hpp"
#include "bitension/numerics.hpp"

namespace bitension {

/// Warp value and derivatives 1..3 at a point.
struct WarpJet {
  double w0 = 0, w1 = 0, w2 = 0, w3 = 0;
};

WarpJet warp_jet(const SmoothFn& warp, double at);

/// Low-level single-point evaluation from raw jets. This is the entry point
/// shared by the analytic path (jets from SmoothFn bundles) and the
/// finite-difference path (jets from NumericProfile stencils).
///
/// The x-chain is evaluated through the sigma^2-scaled combination
///   X = sigma^2 rho'' + sigma sigma' rho' - (c^2 sigma^2 + k^2) lambda lambda'
/// and its first two r-derivatives, so that the large 1/sigma powers divide
/// out only once at the end. Near-pole cancellations then happen between
/// O(1)-sized terms instead of O(1/sigma^4) ones.
FieldSample eval_point(double r, double c, double k, const WarpJet& sigma,
                       const Jet& rho, const WarpJet& lambda, Route route);

/// Tension components (x, y) of the map at r.
std::pair<double, double> tension(const RotSymMap& map, double r);

/// Bitension residuals via the simplified fourth-order system.
std::pair<double, double> bitension_residual_simplified(const RotSymMap& map,
                                                        double r);

/// Bitension residuals via the term-by-term sum of the eleven coordinate
/// expressions of the bitension field. The angular component is scaled by c
/// to match the simplified system's second-equation normalization (the two
/// are algebraically identical).
std::pair<double, double> bitension_residual_termsum(const RotSymMap& map,
                                                     double r);

FieldSample evaluate_at(const RotSymMap& map, double r,
                        Route route = Route::simplified);

/// Grid sweep. With parallel = true the points are evaluated with OpenMP;
/// results are written per-slot, so serial and parallel runs are bit-identical.
ResidualReport evaluate_grid(const RotSymMap& map, const GridSpec& grid,
                             Route route = Route::simplified,
                             bool parallel = false,
                             VerdictThresholds thresholds = {});

/// Fourth-order residual of the flat-torus-to-sphere profile equation
///   rho'''' - 2 kappa^2 cos(2 rho) rho'' + 2 kappa^2 sin(2 rho) rho'^2
///   + (kappa^4/4) sin(4 rho).
double torus_residual(const SmoothFn& rho, double kappa, double r);
double torus_residual(const Jet& rho_jet, double kappa);

/// Sphere-to-sphere system in the variable t = ln tan(r/2):
///   x(t) = cosh^2 t (rho_tt - k^2 sin rho cos rho),
///   res  = x_tt - k^2 x cos(2 rho).
/// Requires c = 0 (the profile is composed with r = 2 arctan e^t).
struct SphereSystemSample {
  double t = 0, r = 0, x = 0, res = 0;
};
SphereSystemSample sphere_system_t(const RotSymMap& map, double t);

/// Bienergy over the grid interval: pi * Int (x^2 + lambda^2(rho) y^2) sigma dr
/// (the angular direction contributes the factor 2 pi, halved by the 1/2 in
/// the functional).
double bienergy(const RotSymMap& map, const GridSpec& grid,
                QuadratureOptions opt = {});

} // namespace bitension

#endif
