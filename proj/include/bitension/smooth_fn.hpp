#ifndef BITENSION_SMOOTH_FN_HPP
#define BITENSION_SMOOTH_FN_HPP

#include <array>
#include <functional>
#include <limits>
#include <memory>
#include <string>

#include "bitension/errors.hpp"

namespace bitension {

/// Open interval (lo, hi). Endpoints may be infinite.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double x) const { return x > lo && x < hi; }
  double width() const { return hi - lo; }

  static Interval all() { return {}; }
};

/// Value and derivatives 1..4 of a scalar function at a point.
struct Jet {
  double v = 0, d1 = 0, d2 = 0, d3 = 0, d4 = 0;

  double operator[](int k) const {
    switch (k) {
    case 0: return v;
    case 1: return d1;
    case 2: return d2;
    case 3: return d3;
    default: return d4;
    }
  }
};

/// A scalar function of one variable bundled with analytic derivatives up to
/// order 4, valid on an open interval. Evaluation outside the interval throws
/// DomainError; there is no extrapolation.
///
/// Instances are immutable values and safe to share across threads.
class SmoothFn {
public:
  using Fn = std::function<double(double)>;

  SmoothFn() = default;
  SmoothFn(Interval domain, Fn f, Fn d1, Fn d2, Fn d3, Fn d4,
           std::string label = "");

  double operator()(double x) const {
    check(x);
    return impl_->f[0](x);
  }

  /// k-th derivative, k = 1..4.
  double deriv(int k, double x) const {
    if (k < 1 || k > 4) throw ConfigError("SmoothFn::deriv: order must be 1..4");
    check(x);
    return impl_->f[static_cast<std::size_t>(k)](x);
  }

  Jet jet(double x) const {
    check(x);
    const auto& f = impl_->f;
    return {f[0](x), f[1](x), f[2](x), f[3](x), f[4](x)};
  }

  const Interval& domain() const { return impl_->domain; }
  const std::string& label() const { return impl_->label; }
  bool valid() const { return impl_ != nullptr; }

private:
  struct Impl {
    Interval domain;
    std::array<Fn, 5> f;
    std::string label;
  };
  std::shared_ptr<const Impl> impl_;

  void check(double x) const {
    if (!impl_) throw ConfigError("SmoothFn: empty function");
    if (!impl_->domain.contains(x))
      throw DomainError("SmoothFn '" + impl_->label + "': point " +
                        std::to_string(x) + " outside open interval (" +
                        std::to_string(impl_->domain.lo) + ", " +
                        std::to_string(impl_->domain.hi) + ")");
  }
};

// ---- combinators (exact chain/product/linearity rules on the bundles) ----

SmoothFn operator+(const SmoothFn& a, const SmoothFn& b);
SmoothFn operator-(const SmoothFn& a, const SmoothFn& b);
SmoothFn operator*(const SmoothFn& a, const SmoothFn& b); // Leibniz to order 4
SmoothFn scale(double s, const SmoothFn& f);
SmoothFn shift(double s, const SmoothFn& f); // f + s

/// g(phi(x)) with derivatives by Faa di Bruno through order 4. The domain is
/// phi's; g's own domain check still fires pointwise at evaluation.
SmoothFn compose(const SmoothFn& g, const SmoothFn& phi);

// ---- primitive catalog ----
namespace fns {

SmoothFn constant(double v, Interval dom = Interval::all());
SmoothFn linear(double a, double b, Interval dom = Interval::all()); // a*x + b
SmoothFn sine(Interval dom = Interval::all());
SmoothFn cosine(Interval dom = Interval::all());
SmoothFn exponential(double a, Interval dom = Interval::all()); // e^{a x}
SmoothFn reciprocal_sine(Interval dom); // 1/sin x on an interval avoiding poles

/// t(r) = ln tan(r/2) on (0, pi).
SmoothFn log_tan_half();

/// r(t) = 2 arctan(e^t), the inverse substitution; r' = sech t.
SmoothFn gudermann_angle();

/// ln(1 + e^{2t}) with logistic-form derivatives, stable for large |t|.
SmoothFn softplus_2t();

/// sqrt(A q^2 + 2 C0 q + C) restricted to where the quadratic stays positive.
SmoothFn quadratic_warp(double A, double C0, double C, Interval dom);

} // namespace fns
} // namespace bitension

#endif
