// Command-line front end: tension/residual tables for catalog or
// parameterized maps, the classification sweep, solution-family profiles,
// and Gauss curvature tables. Exit codes: 0 success, 2 usage/config error,
// 3 numeric failure (pole contact, singular quadrature, domain violation).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bitension/bitension.hpp"
#include "bitension/classify.hpp"
#include "bitension/report_io.hpp"
#include "bitension/solutions.hpp"

namespace bt = bitension;

namespace {

int log_level() {
  const char* env = std::getenv("BITENSION_LOG");
  if (!env) return 0;
  const std::string v(env);
  if (v == "debug" || v == "2") return 2;
  if (v.empty() || v == "0") return 0;
  return 1;
}

void log_note(const std::string& msg) {
  if (log_level() > 0) std::cerr << "[bitension] " << msg << "\n";
}

struct CommonOpts {
  std::string catalog;
  std::string family;
  std::optional<double> a, a1, k, c, kappa, C0, C1, C2, C3, C4, A, C;
  std::optional<double> lo, hi, eps;
  std::optional<std::size_t> n;
  double tol = 1e-10;
  std::string format = "csv";
  std::string out;
  bool check_routes = false;
  std::string sigma = "sin";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool map_params = true) {
  if (map_params) {
    cmd->add_option("--catalog", o.catalog, "catalog map name");
    cmd->add_option("--family", o.family, "solution family name");
    cmd->add_option("--a", o.a, "profile slope a");
    cmd->add_option("--a1", o.a1, "profile offset a1");
    cmd->add_option("--k", o.k, "angular winding k");
    cmd->add_option("--c", o.c, "angular slope c");
    cmd->add_option("--kappa", o.kappa, "torus angular winding");
  }
  cmd->add_option("--C0", o.C0, "constant C0");
  cmd->add_option("--C1", o.C1, "constant C1");
  cmd->add_option("--C2", o.C2, "constant C2");
  cmd->add_option("--C3", o.C3, "constant C3");
  cmd->add_option("--C4", o.C4, "constant C4");
  cmd->add_option("--A", o.A, "target warp^2 quadratic coefficient");
  cmd->add_option("--C", o.C, "target warp^2 constant");
  cmd->add_option("--lo", o.lo, "grid interval start");
  cmd->add_option("--hi", o.hi, "grid interval end");
  cmd->add_option("--n", o.n, "grid point count");
  cmd->add_option("--eps", o.eps, "grid margin from the endpoints");
  cmd->add_option("--tol", o.tol, "quadrature tolerance");
  cmd->add_option("--format", o.format, "csv | json | gnuplot");
  cmd->add_option("--out", o.out, "output path (default stdout)");
  cmd->add_option("--sigma", o.sigma, "domain warp for solve: sin | r");
}

bt::MapParams map_params(const CommonOpts& o) {
  bt::MapParams p;
  p.a = o.a;
  p.a1 = o.a1;
  p.k = o.k;
  p.c = o.c;
  p.kappa = o.kappa;
  p.C0 = o.C0;
  p.C1 = o.C1;
  p.C2 = o.C2;
  p.C3 = o.C3;
  p.C4 = o.C4;
  p.A = o.A;
  p.C = o.C;
  return p;
}

bt::GridSpec apply_grid_overrides(bt::GridSpec g, const CommonOpts& o) {
  if (o.lo) g.lo = *o.lo;
  if (o.hi) g.hi = *o.hi;
  if (o.n) g.n = *o.n;
  if (o.eps) g.margin = *o.eps;
  g.validate();
  return g;
}

/// Routes the table to --out when given, stdout otherwise.
class Output {
public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw bt::ConfigError("cannot open output file " + path);
    }
  }
  std::ostream& table() { return file_.is_open() ? file_ : std::cout; }
  bool to_file() const { return file_.is_open(); }

private:
  std::ofstream file_;
};

int cmd_tension(const CommonOpts& o) {
  if (o.catalog.empty())
    throw bt::ConfigError("tension: --catalog is required");
  bt::CatalogEntry entry = bt::make_catalog_entry(o.catalog, map_params(o));
  const bt::GridSpec grid = apply_grid_overrides(entry.grid, o);
  log_note("tension over " + std::to_string(grid.n) + " points");

  const bt::ResidualReport rep = bt::evaluate_grid(entry.map, grid);
  bt::Table t;
  t.columns = {"r", "x", "y"};
  for (const auto& s : rep.samples) t.rows.push_back({s.r, s.x, s.y});

  Output out(o.out);
  bt::write_table(out.table(), t, bt::parse_format(o.format), "tension");
  if (out.to_file() || bt::parse_format(o.format) != bt::OutputFormat::json)
    std::cout << "# sup_tension=" << bt::format_double(rep.sup_tension)
              << "\n";
  return 0;
}

int cmd_residual(const CommonOpts& o) {
  if (o.catalog.empty())
    throw bt::ConfigError("residual: --catalog is required");
  bt::CatalogEntry entry = bt::make_catalog_entry(o.catalog, map_params(o));
  const bt::GridSpec grid = apply_grid_overrides(entry.grid, o);

  const bt::ResidualReport rep =
      bt::evaluate_grid(entry.map, grid, bt::Route::simplified, true);
  bt::Table t = bt::residual_table(rep);
  const bool json_to_stdout =
      o.out.empty() && bt::parse_format(o.format) == bt::OutputFormat::json;

  double route_gap = 0.0;
  if (o.check_routes) {
    const bt::ResidualReport alt =
        bt::evaluate_grid(entry.map, grid, bt::Route::term_sum, true);
    t.columns.push_back("res1_termsum");
    t.columns.push_back("res2_termsum");
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      t.rows[i].push_back(alt.samples[i].res1);
      t.rows[i].push_back(alt.samples[i].res2);
      route_gap = std::max(route_gap,
                           std::abs(alt.samples[i].res1 - rep.samples[i].res1));
      route_gap = std::max(route_gap,
                           std::abs(alt.samples[i].res2 - rep.samples[i].res2));
    }
  }

  Output out(o.out);
  if (bt::parse_format(o.format) == bt::OutputFormat::json && !o.check_routes)
    out.table() << bt::residual_to_json(rep) << "\n";
  else
    bt::write_table(out.table(), t, bt::parse_format(o.format), "residual");

  // summary goes to stdout unless that would corrupt a JSON stream
  if (!json_to_stdout) {
    std::cout << "# sup_tension=" << bt::format_double(rep.sup_tension) << "\n"
              << "# sup_residual=" << bt::format_double(rep.sup_residual)
              << "\n";
    if (o.check_routes)
      std::cout << "# route_gap=" << bt::format_double(route_gap) << "\n";
    std::cout << "verdict: " << bt::to_string(rep.verdict) << "\n";
  }
  return 0;
}

int cmd_sweep(const CommonOpts& o, const std::vector<double>& as,
              const std::vector<double>& ks, const std::vector<double>& a1s) {
  bt::SweepRanges ranges;
  if (!as.empty()) ranges.a = as;
  if (!ks.empty()) ranges.k = ks;
  if (!a1s.empty()) ranges.a1 = a1s;

  bt::GridSpec grid{0.0, M_PI, 2001, 1e-3};
  grid = apply_grid_overrides(grid, o);
  log_note("sweep over " +
           std::to_string(ranges.a.size() * ranges.k.size() * ranges.a1.size()) +
           " tuples");

  const bt::SweepReport rep = bt::classify_sweep(ranges, grid, true);
  Output out(o.out);
  bt::write_sweep(out.table(), rep, bt::parse_format(o.format));

  if (!o.out.empty() || bt::parse_format(o.format) != bt::OutputFormat::json) {
    std::size_t harmonic = 0, proper = 0;
    for (const auto& row : rep.rows) {
      harmonic += row.verdict == bt::Verdict::harmonic;
      proper += row.verdict == bt::Verdict::proper_biharmonic;
    }
    std::cout << "# tuples=" << rep.rows.size() << " harmonic=" << harmonic
              << " proper_biharmonic=" << proper << "\n";
  }
  return 0;
}

int cmd_solve(const CommonOpts& o) {
  if (o.family.empty()) throw bt::ConfigError("solve: --family is required");

  bt::Table t;
  t.columns = {"r", "rho", "rho_prime", "x"};

  if (o.family == "quadrature" || o.family == "p11") {
    bt::SmoothFn sigma;
    bt::GridSpec grid;
    if (o.sigma == "sin") {
      sigma = bt::fns::sine({0.0, M_PI});
      grid = {0.0, M_PI, 501, 0.1};
    } else if (o.sigma == "r") {
      sigma = bt::fns::linear(1.0, 0.0, {0.0, 1e9});
      grid = {0.3, 3.0, 501, 0.0};
    } else {
      throw bt::ConfigError("solve: --sigma must be sin or r");
    }
    grid = apply_grid_overrides(grid, o);
    const double C0 = o.C0.value_or(0.0), C1 = o.C1.value_or(0.0),
                 C2 = o.C2.value_or(0.0), C3 = o.C3.value_or(0.0),
                 C4 = o.C4.value_or(0.0), k = o.k.value_or(1.0);
    const double base = grid.point(0) < M_PI / 2 && grid.point(grid.n - 1) > M_PI / 2
                            ? M_PI / 2
                            : 0.5 * (grid.point(0) + grid.point(grid.n - 1));
    const bt::QuadratureSolution sol =
        o.family == "quadrature"
            ? bt::build_quadrature_profile(sigma, C1, C2, C3, C4, grid, base,
                                           {o.tol, 40})
            : bt::build_p11_profile(sigma, C0, C1, C2, C3, C4, k, grid, base,
                                    {o.tol, 40});
    for (std::size_t i = 0; i < grid.n; ++i)
      t.rows.push_back({grid.point(i), sol.rho.value(i),
                        sol.rho_prime_values[i], sol.x_values[i]});
  } else if (o.family == "mv") {
    const double C0 = o.C0.value_or(0.0), C1 = o.C1.value_or(0.0),
                 C2 = o.C2.value_or(0.0), C3 = o.C3.value_or(0.0),
                 C4 = o.C4.value_or(0.0);
    bt::GridSpec grid{0.0, M_PI, 501, 0.2};
    grid = apply_grid_overrides(grid, o);
    const bt::SmoothFn rho = bt::mv_profile(C0, C1, C2, C3, C4);
    for (double r : grid.points()) {
      const double th = std::tan(0.5 * r);
      t.rows.push_back({r, rho(r), rho.deriv(1, r), C1 / th + C2 * th});
    }
  } else if (o.family == "pb") {
    bt::GridSpec grid{0.0, M_PI, 501, 0.1};
    grid = apply_grid_overrides(grid, o);
    const bt::SmoothFn rho = bt::pb_profile();
    const bt::RotSymMap map = bt::pb_map();
    for (double r : grid.points())
      t.rows.push_back({r, rho(r), rho.deriv(1, r),
                        bt::tension(map, r).first});
  } else {
    throw bt::ConfigError("solve: unknown family '" + o.family + "'");
  }

  Output out(o.out);
  bt::write_table(out.table(), t, bt::parse_format(o.format), "solve");
  return 0;
}

int cmd_curvature(const CommonOpts& o, bool sphere) {
  bt::WarpedMetric metric =
      sphere ? bt::WarpedMetric::sphere()
             : bt::WarpedMetric::quadratic(o.A.value_or(1.0),
                                           o.C0.value_or(0.0),
                                           o.C.value_or(1.0));
  bt::GridSpec grid =
      sphere ? bt::GridSpec{0.0, M_PI, 201, 1e-2}
             : bt::GridSpec{std::max(metric.interval.lo, -10.0),
                            std::min(metric.interval.hi, 10.0), 201, 1e-6};
  grid = apply_grid_overrides(grid, o);

  bt::Table t;
  t.columns = {"rho", "K"};
  for (double q : grid.points())
    t.rows.push_back({q, bt::gauss_curvature(metric, q)});

  Output out(o.out);
  bt::write_table(out.table(), t, bt::parse_format(o.format), "curvature");
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"tension and bitension fields of rotationally symmetric maps"};
  app.require_subcommand(1);

  CommonOpts ot, orr, os, osv, oc;
  std::vector<double> sweep_a, sweep_k, sweep_a1;
  bool curvature_sphere = false;

  CLI::App* tension = app.add_subcommand("tension", "tension components");
  add_common(tension, ot);

  CLI::App* residual = app.add_subcommand("residual", "bitension residuals");
  add_common(residual, orr);
  residual->add_flag("--check-routes", orr.check_routes,
                     "also report the term-sum route");

  CLI::App* sweep = app.add_subcommand("sweep", "classification sweep");
  add_common(sweep, os, /*map_params=*/false);
  sweep->add_option("--a", sweep_a, "a values (comma separated)")
      ->delimiter(',');
  sweep->add_option("--k", sweep_k, "k values (comma separated)")
      ->delimiter(',');
  sweep->add_option("--a1", sweep_a1, "a1 values (comma separated)")
      ->delimiter(',');

  CLI::App* solve = app.add_subcommand("solve", "emit a solution profile");
  add_common(solve, osv);

  CLI::App* curvature = app.add_subcommand("curvature", "Gauss curvature");
  add_common(curvature, oc);
  curvature->add_flag("--sphere", curvature_sphere, "unit sphere target");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (tension->parsed()) return cmd_tension(ot);
    if (residual->parsed()) return cmd_residual(orr);
    if (sweep->parsed()) return cmd_sweep(os, sweep_a, sweep_k, sweep_a1);
    if (solve->parsed()) return cmd_solve(osv);
    if (curvature->parsed()) return cmd_curvature(oc, curvature_sphere);
  } catch (const bt::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
