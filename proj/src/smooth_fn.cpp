#include "bitension/smooth_fn.hpp"

#include <cmath>
#include <utility>

namespace bitension {

SmoothFn::SmoothFn(Interval domain, Fn f, Fn d1, Fn d2, Fn d3, Fn d4,
                   std::string label) {
  auto impl = std::make_shared<Impl>();
  impl->domain = domain;
  impl->f = {std::move(f), std::move(d1), std::move(d2), std::move(d3),
             std::move(d4)};
  impl->label = std::move(label);
  impl_ = std::move(impl);
}

namespace {

Interval intersect(const Interval& a, const Interval& b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

} // namespace

SmoothFn operator+(const SmoothFn& a, const SmoothFn& b) {
  Interval dom = intersect(a.domain(), b.domain());
  return SmoothFn(
      dom, [a, b](double x) { return a(x) + b(x); },
      [a, b](double x) { return a.deriv(1, x) + b.deriv(1, x); },
      [a, b](double x) { return a.deriv(2, x) + b.deriv(2, x); },
      [a, b](double x) { return a.deriv(3, x) + b.deriv(3, x); },
      [a, b](double x) { return a.deriv(4, x) + b.deriv(4, x); },
      a.label() + "+" + b.label());
}

SmoothFn operator-(const SmoothFn& a, const SmoothFn& b) {
  Interval dom = intersect(a.domain(), b.domain());
  return SmoothFn(
      dom, [a, b](double x) { return a(x) - b(x); },
      [a, b](double x) { return a.deriv(1, x) - b.deriv(1, x); },
      [a, b](double x) { return a.deriv(2, x) - b.deriv(2, x); },
      [a, b](double x) { return a.deriv(3, x) - b.deriv(3, x); },
      [a, b](double x) { return a.deriv(4, x) - b.deriv(4, x); },
      a.label() + "-" + b.label());
}

SmoothFn operator*(const SmoothFn& a, const SmoothFn& b) {
  Interval dom = intersect(a.domain(), b.domain());
  return SmoothFn(
      dom, [a, b](double x) { return a(x) * b(x); },
      [a, b](double x) {
        Jet f = a.jet(x), g = b.jet(x);
        return f.d1 * g.v + f.v * g.d1;
      },
      [a, b](double x) {
        Jet f = a.jet(x), g = b.jet(x);
        return f.d2 * g.v + 2.0 * f.d1 * g.d1 + f.v * g.d2;
      },
      [a, b](double x) {
        Jet f = a.jet(x), g = b.jet(x);
        return f.d3 * g.v + 3.0 * f.d2 * g.d1 + 3.0 * f.d1 * g.d2 + f.v * g.d3;
      },
      [a, b](double x) {
        Jet f = a.jet(x), g = b.jet(x);
        return f.d4 * g.v + 4.0 * f.d3 * g.d1 + 6.0 * f.d2 * g.d2 +
               4.0 * f.d1 * g.d3 + f.v * g.d4;
      },
      a.label() + "*" + b.label());
}

SmoothFn scale(double s, const SmoothFn& f) {
  return SmoothFn(
      f.domain(), [s, f](double x) { return s * f(x); },
      [s, f](double x) { return s * f.deriv(1, x); },
      [s, f](double x) { return s * f.deriv(2, x); },
      [s, f](double x) { return s * f.deriv(3, x); },
      [s, f](double x) { return s * f.deriv(4, x); }, f.label());
}

SmoothFn shift(double s, const SmoothFn& f) {
  return SmoothFn(
      f.domain(), [s, f](double x) { return f(x) + s; },
      [f](double x) { return f.deriv(1, x); },
      [f](double x) { return f.deriv(2, x); },
      [f](double x) { return f.deriv(3, x); },
      [f](double x) { return f.deriv(4, x); }, f.label());
}

SmoothFn compose(const SmoothFn& g, const SmoothFn& phi) {
  return SmoothFn(
      phi.domain(), [g, phi](double x) { return g(phi(x)); },
      [g, phi](double x) {
        Jet p = phi.jet(x);
        return g.deriv(1, p.v) * p.d1;
      },
      [g, phi](double x) {
        Jet p = phi.jet(x);
        Jet gj = g.jet(p.v);
        return gj.d2 * p.d1 * p.d1 + gj.d1 * p.d2;
      },
      [g, phi](double x) {
        Jet p = phi.jet(x);
        Jet gj = g.jet(p.v);
        return gj.d3 * p.d1 * p.d1 * p.d1 + 3.0 * gj.d2 * p.d1 * p.d2 +
               gj.d1 * p.d3;
      },
      [g, phi](double x) {
        Jet p = phi.jet(x);
        Jet gj = g.jet(p.v);
        double p1sq = p.d1 * p.d1;
        return gj.d4 * p1sq * p1sq + 6.0 * gj.d3 * p1sq * p.d2 +
               gj.d2 * (3.0 * p.d2 * p.d2 + 4.0 * p.d1 * p.d3) + gj.d1 * p.d4;
      },
      g.label() + "(" + phi.label() + ")");
}

namespace fns {

SmoothFn constant(double v, Interval dom) {
  return SmoothFn(
      dom, [v](double) { return v; }, [](double) { return 0.0; },
      [](double) { return 0.0; }, [](double) { return 0.0; },
      [](double) { return 0.0; }, "const");
}

SmoothFn linear(double a, double b, Interval dom) {
  return SmoothFn(
      dom, [a, b](double x) { return a * x + b; },
      [a](double) { return a; }, [](double) { return 0.0; },
      [](double) { return 0.0; }, [](double) { return 0.0; }, "linear");
}

SmoothFn sine(Interval dom) {
  return SmoothFn(
      dom, [](double x) { return std::sin(x); },
      [](double x) { return std::cos(x); },
      [](double x) { return -std::sin(x); },
      [](double x) { return -std::cos(x); },
      [](double x) { return std::sin(x); }, "sin");
}

SmoothFn cosine(Interval dom) {
  return SmoothFn(
      dom, [](double x) { return std::cos(x); },
      [](double x) { return -std::sin(x); },
      [](double x) { return -std::cos(x); },
      [](double x) { return std::sin(x); },
      [](double x) { return std::cos(x); }, "cos");
}

SmoothFn exponential(double a, Interval dom) {
  auto d = [a](int k) {
    return [a, k](double x) { return std::pow(a, k) * std::exp(a * x); };
  };
  return SmoothFn(dom, d(0), d(1), d(2), d(3), d(4), "exp");
}

SmoothFn reciprocal_sine(Interval dom) {
  // (1/sin)' = -cos/sin^2, and so on; written over csc and cot.
  auto csc = [](double x) { return 1.0 / std::sin(x); };
  auto cot = [](double x) { return std::cos(x) / std::sin(x); };
  return SmoothFn(
      dom, [csc](double x) { return csc(x); },
      [csc, cot](double x) { return -csc(x) * cot(x); },
      [csc, cot](double x) {
        double c = csc(x), t = cot(x);
        return c * (t * t + c * c);
      },
      [csc, cot](double x) {
        double c = csc(x), t = cot(x);
        return -t * c * (t * t + 5.0 * c * c);
      },
      [csc, cot](double x) {
        double c = csc(x), t = cot(x);
        double t2 = t * t, c2 = c * c;
        return c * (t2 * t2 + 18.0 * t2 * c2 + 5.0 * c2 * c2);
      },
      "1/sin");
}

SmoothFn log_tan_half() {
  // t(r) = ln tan(r/2); t' = 1/sin r, t'' = -cos/sin^2,
  // t''' = (1+cos^2)/sin^3, t'''' = -cos(5+cos^2)/sin^4.
  return SmoothFn(
      {0.0, M_PI}, [](double r) { return std::log(std::tan(0.5 * r)); },
      [](double r) { return 1.0 / std::sin(r); },
      [](double r) {
        double s = std::sin(r), c = std::cos(r);
        return -c / (s * s);
      },
      [](double r) {
        double s = std::sin(r), c = std::cos(r);
        return (1.0 + c * c) / (s * s * s);
      },
      [](double r) {
        double s = std::sin(r), c = std::cos(r);
        double s2 = s * s;
        return -c * (5.0 + c * c) / (s2 * s2);
      },
      "log_tan_half");
}

SmoothFn gudermann_angle() {
  // r(t) = 2 arctan(e^t); r' = sech t and the higher derivatives follow the
  // sech chain: r'' = -sech tanh, r''' = sech(tanh^2 - sech^2),
  // r'''' = sech tanh (5 sech^2 - tanh^2).
  return SmoothFn(
      Interval::all(),
      [](double t) { return 2.0 * std::atan(std::exp(t)); },
      [](double t) { return 1.0 / std::cosh(t); },
      [](double t) {
        double sc = 1.0 / std::cosh(t);
        return -sc * std::tanh(t);
      },
      [](double t) {
        double sc = 1.0 / std::cosh(t), th = std::tanh(t);
        return sc * (th * th - sc * sc);
      },
      [](double t) {
        double sc = 1.0 / std::cosh(t), th = std::tanh(t);
        return sc * th * (5.0 * sc * sc - th * th);
      },
      "gudermann");
}

SmoothFn softplus_2t() {
  auto sigmoid2 = [](double t) {
    // e^{2t}/(1+e^{2t}) without overflow.
    return t > 0 ? 1.0 / (1.0 + std::exp(-2.0 * t))
                 : std::exp(2.0 * t) / (1.0 + std::exp(2.0 * t));
  };
  return SmoothFn(
      Interval::all(),
      [](double t) {
        return t > 0 ? 2.0 * t + std::log1p(std::exp(-2.0 * t))
                     : std::log1p(std::exp(2.0 * t));
      },
      [sigmoid2](double t) { return 2.0 * sigmoid2(t); },
      [sigmoid2](double t) {
        double s = sigmoid2(t);
        return 4.0 * s * (1.0 - s);
      },
      [sigmoid2](double t) {
        double s = sigmoid2(t);
        return 8.0 * s * (1.0 - s) * (1.0 - 2.0 * s);
      },
      [sigmoid2](double t) {
        double s = sigmoid2(t);
        return 16.0 * s * (1.0 - s) * (1.0 - 6.0 * s + 6.0 * s * s);
      },
      "ln(1+e^{2t})");
}

SmoothFn quadratic_warp(double A, double C0, double C, Interval dom) {
  // lambda = sqrt(Q), Q = A q^2 + 2 C0 q + C. With N = 2 Q'' Q - Q'^2 and
  // Q''' = 0, N is constant in q, which keeps the third and fourth
  // derivatives short.
  auto Q = [A, C0, C](double q) { return (A * q + 2.0 * C0) * q + C; };
  auto Qp = [A, C0](double q) { return 2.0 * A * q + 2.0 * C0; };
  const double Qpp = 2.0 * A;
  return SmoothFn(
      dom, [Q](double q) { return std::sqrt(Q(q)); },
      [Q, Qp](double q) { return Qp(q) / (2.0 * std::sqrt(Q(q))); },
      [Q, Qp, Qpp](double q) {
        double qv = Q(q), qp = Qp(q);
        return (2.0 * Qpp * qv - qp * qp) / (4.0 * qv * std::sqrt(qv));
      },
      [Q, Qp, Qpp](double q) {
        double qv = Q(q), qp = Qp(q);
        double N = 2.0 * Qpp * qv - qp * qp;
        return -3.0 * qp * N / (8.0 * qv * qv * std::sqrt(qv));
      },
      [Q, Qp, Qpp](double q) {
        double qv = Q(q), qp = Qp(q);
        double N = 2.0 * Qpp * qv - qp * qp;
        return -3.0 * N * (2.0 * Qpp * qv - 5.0 * qp * qp) /
               (16.0 * qv * qv * qv * std::sqrt(qv));
      },
      "sqrt_quadratic");
}

} // namespace fns
} // namespace bitension
