#include "bitension/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bitension {

namespace {

double stencil_value(const RealFn& f, int order, double at, double h) {
  const double fm2 = f(at - 2.0 * h), fm1 = f(at - h), f0 = f(at),
               fp1 = f(at + h), fp2 = f(at + 2.0 * h);
  switch (order) {
  case 1: return (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
  case 2:
    return (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
  case 3: return (-fm2 + 2.0 * fm1 - 2.0 * fp1 + fp2) / (2.0 * h * h * h);
  default:
    return (fm2 - 4.0 * fm1 + 6.0 * f0 - 4.0 * fp1 + fp2) / (h * h * h * h);
  }
}

} // namespace

double fd_derivative(const RealFn& f, int order, double at, double step,
                     Interval domain) {
  if (order < 1 || order > 4)
    throw ConfigError("fd_derivative: order must be 1..4");
  if (!(step > 0)) throw ConfigError("fd_derivative: step must be positive");
  if (!(at - 2.0 * step > domain.lo) || !(at + 2.0 * step < domain.hi))
    throw StencilError("fd_derivative: stencil outside domain at " +
                       std::to_string(at));
  return stencil_value(f, order, at, step);
}

double fd_default_step(int order, const Interval& domain) {
  double w = domain.width();
  if (!std::isfinite(w)) w = 1.0;
  return order <= 2 ? w * 1e-3 : w * 1e-2;
}

namespace {

struct SimpsonState {
  const RealFn& f;
  double tol;
  int max_depth;
};

double simpson(double fa, double fm, double fb, double a, double b) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const SimpsonState& st, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = st.f(lm), frm = st.f(rm);
  const double left = simpson(fa, flm, fm, a, m);
  const double right = simpson(fm, frm, fb, m, b);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth >= st.max_depth)
    throw QuadratureError(
        "integrate: max subdivision depth exceeded near x = " +
        std::to_string(m) + " (singular integrand?)");
  return adapt(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         adapt(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

} // namespace

double integrate(const RealFn& f, double a, double b, QuadratureOptions opt) {
  if (a == b) return 0.0;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  if (!std::isfinite(fa) || !std::isfinite(fb) || !std::isfinite(fm))
    throw QuadratureError("integrate: integrand not finite on [a, b]");
  SimpsonState st{f, opt.tol, opt.max_depth};
  const double whole = simpson(fa, fm, fb, a, b);
  return sign * adapt(st, a, b, fa, fm, fb, whole, opt.tol, 0);
}

Antiderivative::Antiderivative(RealFn f, const GridSpec& grid, double base,
                               QuadratureOptions opt)
    : f_(std::move(f)), grid_(grid), base_(base), opt_(opt) {
  grid_.validate();
  // Cumulative integrals between consecutive grid points; each local piece
  // gets a share of the tolerance so the running sum stays within opt.tol.
  QuadratureOptions local = opt_;
  local.tol = opt_.tol / static_cast<double>(grid_.n);
  at_points_.resize(grid_.n);
  const double r0 = grid_.point(0);
  double acc = integrate(f_, base_, r0, local);
  at_points_[0] = acc;
  for (std::size_t i = 1; i < grid_.n; ++i) {
    acc += integrate(f_, grid_.point(i - 1), grid_.point(i), local);
    at_points_[i] = acc;
  }
}

double Antiderivative::operator()(double r) const {
  const double lo = grid_.point(0), hi = grid_.point(grid_.n - 1);
  QuadratureOptions local = opt_;
  local.tol = opt_.tol / static_cast<double>(grid_.n);
  if (r <= lo) return at_points_[0] + integrate(f_, lo, r, local);
  if (r >= hi) return at_points_[grid_.n - 1] + integrate(f_, hi, r, local);
  auto idx = static_cast<std::size_t>((r - lo) / grid_.step());
  idx = std::min(idx, grid_.n - 1);
  return at_points_[idx] + integrate(f_, grid_.point(idx), r, local);
}

NumericProfile antiderivative_on_grid(const RealFn& f, const GridSpec& grid,
                                      double base, QuadratureOptions opt) {
  Antiderivative F(f, grid, base, opt);
  return NumericProfile(grid, F.checkpoint_values());
}

double polynomial_eval(const std::vector<double>& coeffs, double t) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * t + *it;
  return acc;
}

std::vector<RootBracket> bracket_positive_roots(
    const std::vector<double>& coeffs, double lo, double hi,
    std::size_t scan_points) {
  if (!(lo < hi)) throw ConfigError("bracket_positive_roots: need lo < hi");
  if (scan_points < 2) scan_points = 2;
  std::vector<RootBracket> out;
  const double dt = (hi - lo) / static_cast<double>(scan_points - 1);
  double prev_t = lo, prev_v = polynomial_eval(coeffs, lo);
  for (std::size_t i = 1; i < scan_points; ++i) {
    const double t = lo + static_cast<double>(i) * dt;
    const double v = polynomial_eval(coeffs, t);
    if (prev_v == 0.0) {
      out.push_back({prev_t, prev_t});
    } else if (v != 0.0 && std::signbit(v) != std::signbit(prev_v)) {
      // refine by bisection
      double a = prev_t, b = t, fa = prev_v;
      for (int it = 0; it < 80 && b - a > 1e-14 * std::max(1.0, std::abs(a));
           ++it) {
        const double m = 0.5 * (a + b);
        const double fmid = polynomial_eval(coeffs, m);
        if (fmid == 0.0) {
          a = b = m;
          break;
        }
        if (std::signbit(fmid) == std::signbit(fa)) {
          a = m;
          fa = fmid;
        } else {
          b = m;
        }
      }
      out.push_back({a, b});
    }
    prev_t = t;
    prev_v = v;
  }
  if (prev_v == 0.0) out.push_back({prev_t, prev_t});
  return out;
}

} // namespace bitension
