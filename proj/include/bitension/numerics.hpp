#ifndef BITENSION_NUMERICS_HPP
#define BITENSION_NUMERICS_HPP

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "bitension/grid.hpp"

namespace bitension {

using RealFn = std::function<double(double)>;

// ---- finite differences ----

/// Central finite-difference estimate of the order-th derivative at a point.
/// Orders 1-2 use the 5-point O(h^4) stencils, orders 3-4 the 5-point O(h^2)
/// stencils. The stencil spans [at - 2h, at + 2h] and must fit inside domain.
double fd_derivative(const RealFn& f, int order, double at, double step,
                     Interval domain = Interval::all());

/// Default steps: width*1e-3 for orders 1-2, width*1e-2 for orders 3-4.
double fd_default_step(int order, const Interval& domain);

// ---- quadrature ----

struct QuadratureOptions {
  double tol = 1e-10;
  int max_depth = 40;
};

/// Adaptive Simpson with interval bisection. Throws QuadratureError when the
/// subdivision budget runs out (singular integrand). Signed for a > b.
double integrate(const RealFn& f, double a, double b,
                 QuadratureOptions opt = {});

inline double integrate(const RealFn& f, double a, double b, double tol) {
  return integrate(f, a, b, QuadratureOptions{tol, 40});
}

/// F(r) = Int_base^r f, evaluable anywhere on the grid's covered interval.
/// Checkpoints at the grid points keep each local quadrature short, so nested
/// antiderivatives stay cheap and accurate.
class Antiderivative {
public:
  Antiderivative(RealFn f, const GridSpec& grid, double base,
                 QuadratureOptions opt = {});

  double operator()(double r) const;
  const std::vector<double>& checkpoint_values() const { return at_points_; }
  const GridSpec& grid() const { return grid_; }

private:
  RealFn f_;
  GridSpec grid_;
  double base_;
  QuadratureOptions opt_;
  std::vector<double> at_points_;
};

/// Grid profile of the antiderivative with F(base) = 0 and F' = f.
NumericProfile antiderivative_on_grid(const RealFn& f, const GridSpec& grid,
                                      double base, QuadratureOptions opt = {});

// ---- polynomials and root bracketing ----

/// Horner evaluation; coefficients ascending (c0 + c1 t + c2 t^2 + ...).
double polynomial_eval(const std::vector<double>& coeffs, double t);

struct RootBracket {
  double lo, hi;
};

/// Sign-change brackets of the polynomial on [lo, hi], found by a dense scan
/// (default 1e5 points) refined by bisection. An empty result certifies no
/// sign change at scan resolution.
std::vector<RootBracket> bracket_positive_roots(
    const std::vector<double>& coeffs, double lo, double hi,
    std::size_t scan_points = 100000);

} // namespace bitension

#endif
