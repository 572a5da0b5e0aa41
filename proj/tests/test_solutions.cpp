#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bitension/bitension.hpp"
#include "bitension/solutions.hpp"
#include "oracles.hpp"

using namespace bitension;

TEST_CASE("quadrature profile over sigma = r spans the flat-polar basis") {
  const SmoothFn sigma_r = fns::linear(1.0, 0.0, {0.0, 1e9});
  const GridSpec grid{0.5, 3.0, 201, 0.0};
  auto gen = oracle::rng(1001);
  const std::vector<std::function<double(double)>> basis{
      [](double r) { return r * r * std::log(r); },
      [](double r) { return r * r; },
      [](double r) { return std::log(r); },
      [](double) { return 1.0; }};
  for (int trial = 0; trial < 5; ++trial) {
    const double C1 = oracle::uniform(gen, -2, 2);
    const double C2 = oracle::uniform(gen, -2, 2);
    const double C3 = oracle::uniform(gen, -2, 2);
    const double C4 = oracle::uniform(gen, -2, 2);
    const QuadratureSolution sol =
        build_quadrature_profile(sigma_r, C1, C2, C3, C4, grid);
    CHECK(oracle::basis_fit_residual(grid.points(), sol.rho.values(), basis) <
          1e-6);
  }
}

TEST_CASE("quadrature profile: C3-only reduces to ln tan(r/2)") {
  const SmoothFn sigma = fns::sine({0.0, M_PI});
  const GridSpec grid{0.0, M_PI, 201, 0.1};
  const QuadratureSolution sol =
      build_quadrature_profile(sigma, 0.0, 0.0, 1.0, 0.0, grid);
  CHECK_FALSE(sol.proper); // x = 0: harmonic member
  for (std::size_t i = 0; i < grid.n; i += 9) {
    const double expected = std::log(std::tan(0.5 * grid.point(i)));
    CHECK(sol.rho.value(i) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(sol.x_values[i] == 0.0);
  }
}

TEST_CASE("quadrature profile: exact rho' column matches grid stencils") {
  const SmoothFn sigma = fns::sine({0.0, M_PI});
  const GridSpec grid{0.0, M_PI, 201, 0.5};
  const QuadratureSolution sol =
      build_quadrature_profile(sigma, 0.7, -0.5, 0.3, 0.1, grid);
  const auto& d1 = sol.rho.derivative(1); // O(h^4) stencil, h ~ 1e-2
  for (std::size_t i = 2; i + 2 < grid.n; i += 7)
    CHECK(sol.rho_prime_values[i] == doctest::Approx(d1[i]).epsilon(1e-5));
}

TEST_CASE("quadrature profile: all-zero constants give a constant") {
  const SmoothFn sigma = fns::sine({0.0, M_PI});
  const GridSpec grid{0.0, M_PI, 101, 0.2};
  const QuadratureSolution sol =
      build_quadrature_profile(sigma, 0.0, 0.0, 0.0, 0.7, grid);
  for (std::size_t i = 0; i < grid.n; i += 5)
    CHECK(sol.rho.value(i) == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("p11 profile: C0 = 0 coincides with the plain quadrature build") {
  const SmoothFn sigma = fns::sine({0.0, M_PI});
  const GridSpec grid{0.0, M_PI, 101, 0.15};
  const QuadratureSolution a =
      build_quadrature_profile(sigma, 0.4, -0.3, 1.0, 0.2, grid);
  const QuadratureSolution b =
      build_p11_profile(sigma, 0.0, 0.4, -0.3, 1.0, 0.2, 1.0, grid);
  for (std::size_t i = 0; i < grid.n; ++i)
    CHECK(a.rho.value(i) == doctest::Approx(b.rho.value(i)).epsilon(1e-13));
}

TEST_CASE("p11 profile reconstructs the pb closed form") {
  const SmoothFn sigma = fns::sine({0.0, M_PI});
  const GridSpec grid{0.0, M_PI, 501, 0.1};
  const QuadratureSolution sol =
      build_p11_profile(sigma, 0.5, 0.0, 1.0, 0.0, 1.0, 1.0, grid);
  const SmoothFn pb = pb_profile();
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.n; ++i)
    worst = std::max(worst, std::abs(sol.rho.value(i) - pb(grid.point(i))));
  CHECK(worst < 1e-6);
  CHECK(sol.proper);
}

TEST_CASE("pb profile: values and proper-biharmonicity") {
  const SmoothFn rho = pb_profile();
  CHECK(rho(M_PI / 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(rho.deriv(1, M_PI / 2)) < 1e-15);

  const RotSymMap map = pb_map();
  const ResidualReport rep = evaluate_grid(map, GridSpec{0.0, M_PI, 2001, 0.1});
  CHECK(rep.sup_residual < 1e-8);
  CHECK(rep.verdict == Verdict::proper_biharmonic);
  for (const auto& s : rep.samples) CHECK(std::abs(s.x - 1.0) < 1e-10);
}

TEST_CASE("quadrature-built profiles satisfy the double-Laplacian equation") {
  // Delta applied twice through the grid stencils; grid step 8e-3 balances
  // stencil truncation against roundoff amplification.
  const SmoothFn sigma = fns::sine({0.0, M_PI});
  const GridSpec grid{0.7, M_PI - 0.7, 218, 0.0};
  auto gen = oracle::rng(555);
  for (int trial = 0; trial < 3; ++trial) {
    const double C1 = oracle::uniform(gen, -2, 2);
    const double C2 = oracle::uniform(gen, -2, 2);
    const double C3 = oracle::uniform(gen, -2, 2);
    const QuadratureSolution sol =
        build_quadrature_profile(sigma, C1, C2, C3, 0.3, grid);

    auto laplacian = [&](const NumericProfile& p) {
      const auto& d1 = p.derivative(1);
      const auto& d2 = p.derivative(2);
      std::vector<double> out(grid.n,
                              std::numeric_limits<double>::quiet_NaN());
      for (std::size_t i = 2; i + 2 < grid.n; ++i) {
        const double r = grid.point(i);
        out[i] = d2[i] + std::cos(r) / std::sin(r) * d1[i];
      }
      return out;
    };

    std::vector<double> lap = laplacian(sol.rho);
    // second application works on the interior samples of the first
    NumericProfile inner(grid, lap);
    const auto& ld1 = inner.derivative(1);
    const auto& ld2 = inner.derivative(2);
    double worst = 0.0;
    for (std::size_t i = 4; i + 4 < grid.n; ++i) {
      const double r = grid.point(i);
      worst = std::max(
          std::abs(ld2[i] + std::cos(r) / std::sin(r) * ld1[i]), worst);
    }
    CHECK(worst < 1e-4);
  }
}

TEST_CASE("mv profile: stereographic and example members") {
  const SmoothFn north = mv_profile(0, 0, 0, 1, 0);
  const SmoothFn south = mv_profile(0, 0, 0, 0, 1);
  const SmoothFn example = mv_profile(0, 0, -1, 0, 0);
  for (double r : {0.4, 1.0, 2.0, 2.8}) {
    const double th = std::tan(0.5 * r);
    CHECK(north(r) == doctest::Approx(1.0 / th).epsilon(1e-12));
    CHECK(south(r) == doctest::Approx(th).epsilon(1e-12));
    const double expected = (1.0 / th) * (1.0 + std::log1p(th * th));
    CHECK(example(r) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("mv profile: constant member is the harmonic point rho = -C0") {
  const SmoothFn rho = mv_profile(0.8, 0, 0, 0, 0);
  for (double r : {0.5, 1.5, 2.5})
    CHECK(rho(r) == doctest::Approx(-0.8).epsilon(1e-14));
  const RotSymMap map = mv_map(0.8, 0, 0, 0, 0, 2.0);
  const ResidualReport rep = evaluate_grid(map, GridSpec{0.0, M_PI, 501, 0.2});
  CHECK(rep.verdict == Verdict::harmonic);
  CHECK(rep.sup_tension < 1e-12);
}

TEST_CASE("mv family: random members are proper biharmonic") {
  auto gen = oracle::rng(2024);
  int accepted = 0;
  while (accepted < 10) {
    const double C0 = oracle::uniform(gen, -2, 2);
    const double C1 = oracle::uniform(gen, -2, 2);
    const double C2 = oracle::uniform(gen, -2, 2);
    const double C3 = oracle::uniform(gen, -2, 2);
    const double C4 = oracle::uniform(gen, -2, 2);
    if (C1 * C1 + C2 * C2 < 1e-4) continue;
    const double C = C0 * C0 + 1.0 + oracle::uniform(gen, 0.0, 2.0);
    ++accepted;
    const RotSymMap map = mv_map(C0, C1, C2, C3, C4, C);
    const ResidualReport rep =
        evaluate_grid(map, GridSpec{0.0, M_PI, 1001, 0.2});
    INFO("C = ", C0, " ", C1, " ", C2, " ", C3, " ", C4);
    CHECK(rep.sup_residual < 1e-8);
    CHECK(rep.verdict == Verdict::proper_biharmonic);

    // tension matches x = C1 cot(r/2) + C2 tan(r/2)
    for (double r : {0.5, 1.3, 2.4}) {
      const double th = std::tan(0.5 * r);
      CHECK(tension(map, r).first ==
            doctest::Approx(C1 / th + C2 * th).epsilon(1e-8));
    }
  }
}

TEST_CASE("mv map: profile leaving the target interval is an error") {
  // warp^2 = rho^2 - 1 is only valid for rho > 1; 2 cot(r/2) drops below
  // that well before r = 2.5
  const RotSymMap map = mv_map(0.0, 0.0, 0.0, 2.0, 0.0, -1.0);
  CHECK_NOTHROW(evaluate_at(map, 0.5));
  CHECK_THROWS_AS(evaluate_at(map, 2.5), DomainError);
  CHECK_THROWS_AS(evaluate_grid(map, GridSpec{0.0, M_PI, 101, 0.2}),
                  DomainError);
}

TEST_CASE("mv profile in t agrees with the r form") {
  const SmoothFn in_t = mv_profile_t(0.3, 0.7, -0.4, 1.1, 0.5);
  const SmoothFn in_r = mv_profile(0.3, 0.7, -0.4, 1.1, 0.5);
  for (double r : {0.4, 1.0, 1.8, 2.6}) {
    const double t = std::log(std::tan(0.5 * r));
    CHECK(in_t(t) == doctest::Approx(in_r(r)).epsilon(1e-13));
  }
}

TEST_CASE("variation of parameters: integrated forms differentiate back") {
  auto gen = oracle::rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    const double C0 = oracle::uniform(gen, -2, 2);
    const double C1 = oracle::uniform(gen, -2, 2);
    const double C2 = oracle::uniform(gen, -2, 2);
    const double t = oracle::uniform(gen, -2.0, 2.0);
    const VPSample vp = variation_of_parameters_check(C0, C1, C2, t);

    auto u1_of = [&](double s) {
      return variation_of_parameters_check(C0, C1, C2, s).u1;
    };
    auto u2_of = [&](double s) {
      return variation_of_parameters_check(C0, C1, C2, s).u2;
    };
    CHECK(oracle::richardson_fd(u1_of, 1, t, 1e-2) ==
          doctest::Approx(vp.u1p).epsilon(1e-8));
    CHECK(oracle::richardson_fd(u2_of, 1, t, 1e-2) ==
          doctest::Approx(vp.u2p).epsilon(1e-8));
  }
}

TEST_CASE("variation of parameters: homogeneous case and the assembled ODE") {
  const VPSample vp0 = variation_of_parameters_check(0, 0, 0, 0.7);
  CHECK(vp0.u1 == 0.0);
  CHECK(vp0.u2 == 0.0);
  CHECK(vp0.u1p == 0.0);
  CHECK(vp0.u2p == 0.0);

  // assembled rho satisfies rho_tt - rho = 4 e^{2t}(C1 e^{-t} + C2 e^t)/(1+e^{2t})^2 + C0
  auto gen = oracle::rng(808);
  for (int trial = 0; trial < 10; ++trial) {
    const double C0 = oracle::uniform(gen, -2, 2);
    const double C1 = oracle::uniform(gen, -2, 2);
    const double C2 = oracle::uniform(gen, -2, 2);
    const double C3 = oracle::uniform(gen, -1, 1);
    const double C4 = oracle::uniform(gen, -1, 1);
    const double t = oracle::uniform(gen, -1.5, 1.5);
    auto rho_of = [&](double s) {
      return vp_assembled_rho(C0, C1, C2, C3, C4, s);
    };
    const double rho_tt = oracle::richardson_fd2(rho_of, 2, t, 0.05);
    const double e2t = std::exp(2.0 * t);
    const double rhs = 4.0 * e2t *
                           (C1 * std::exp(-t) + C2 * std::exp(t)) /
                           ((1.0 + e2t) * (1.0 + e2t)) +
                       C0;
    CHECK(std::abs(rho_tt - rho_of(t) - rhs) < 1e-8);
  }

  // the assembled form IS the closed-form family
  for (double t : {-1.0, 0.0, 0.8}) {
    CHECK(vp_assembled_rho(0.3, 0.7, -0.4, 1.1, 0.5, t) ==
          doctest::Approx(mv_profile_t(0.3, 0.7, -0.4, 1.1, 0.5)(t))
              .epsilon(1e-12));
  }
}

TEST_CASE("variation of parameters: secular term dominates for t << 0") {
  // u2's C1-part is 2 C1 t + C1/(1+e^{2t}) - C1 ln(1+e^{2t}); for large
  // negative t this approaches 2t + 1.
  for (double t : {-10.0, -20.0}) {
    const VPSample with = variation_of_parameters_check(0, 1, 0, t);
    const VPSample without = variation_of_parameters_check(0, 0, 0, t);
    CHECK((with.u2 - without.u2) ==
          doctest::Approx(2.0 * t + 1.0).epsilon(1e-6));
  }
}

TEST_CASE("f_k maps: classified members") {
  const ResidualReport id = evaluate_grid(f_k_map(1.0, 0.0, 1.0),
                                          GridSpec{0.0, M_PI, 501, 1e-3});
  CHECK(id.verdict == Verdict::harmonic);

  const ResidualReport reflected = evaluate_grid(
      f_k_map(-1.0, M_PI, 1.0), GridSpec{0.0, M_PI, 501, 1e-3});
  CHECK(reflected.verdict == Verdict::harmonic);

  const ResidualReport f2 = evaluate_grid(f_k_map(2.0, 0.0, 1.0),
                                          GridSpec{0.0, M_PI, 501, 1e-3});
  CHECK(f2.verdict == Verdict::neither);
  CHECK(f2.sup_tension == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("catalog verdicts match their expected classification") {
  for (const std::string& name : catalog_names()) {
    const CatalogEntry entry = make_catalog_entry(name);
    const ResidualReport rep = evaluate_grid(entry.map, entry.grid);
    INFO(name);
    CHECK(rep.verdict == entry.expected);
  }
}

TEST_CASE("catalog rejects unknown names, accepts underscore spelling") {
  CHECK_THROWS_AS(make_catalog_entry("no-such-map"), ConfigError);
  CHECK(make_catalog_entry("identity_sphere").name == "identity-sphere");
  CHECK(make_catalog_entry("f_k").name == "f-k");
}
