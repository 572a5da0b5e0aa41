// Timing comparison of the serial reference evaluation against the
// OpenMP-parallel kernels, for a dense residual grid and for the
// classification sweep. Also verifies the two agree bit-for-bit.

#include <chrono>
#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bitension/classify.hpp"
#include "bitension/solutions.hpp"

namespace bt = bitension;

namespace {

template <typename F>
double time_seconds(F&& fn, int repeats) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < repeats; ++i) fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count() / repeats;
}

bool samples_equal(const bt::ResidualReport& a, const bt::ResidualReport& b) {
  if (a.samples.size() != b.samples.size()) return false;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    const auto& p = a.samples[i];
    const auto& q = b.samples[i];
    if (std::memcmp(&p, &q, sizeof p) != 0) return false;
  }
  return true;
}

} // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; parallel runs fall back to serial\n");
#endif

  const bt::RotSymMap pb = bt::pb_map();
  const bt::GridSpec dense{0.0, M_PI, 200001, 0.1};

  bt::ResidualReport serial_rep, parallel_rep;
  const double t_grid_serial = time_seconds(
      [&] { serial_rep = bt::evaluate_grid(pb, dense, bt::Route::simplified,
                                           false); },
      3);
  const double t_grid_parallel = time_seconds(
      [&] { parallel_rep = bt::evaluate_grid(pb, dense, bt::Route::simplified,
                                             true); },
      3);
  std::printf("residual grid  (%zu pts): serial %8.3f ms | openmp %8.3f ms | "
              "speedup %.2fx | bitwise equal: %s\n",
              dense.n, 1e3 * t_grid_serial, 1e3 * t_grid_parallel,
              t_grid_serial / t_grid_parallel,
              samples_equal(serial_rep, parallel_rep) ? "yes" : "NO");

  const bt::SweepRanges ranges;
  const bt::GridSpec sweep_grid{0.0, M_PI, 2001, 1e-3};
  bt::SweepReport s_serial, s_parallel;
  const double t_sweep_serial = time_seconds(
      [&] { s_serial = bt::classify_sweep(ranges, sweep_grid, false); }, 1);
  const double t_sweep_parallel = time_seconds(
      [&] { s_parallel = bt::classify_sweep(ranges, sweep_grid, true); }, 1);
  std::printf("classify sweep (%zu tuples): serial %8.3f ms | openmp %8.3f ms "
              "| speedup %.2fx | equal: %s\n",
              s_serial.rows.size(), 1e3 * t_sweep_serial,
              1e3 * t_sweep_parallel, t_sweep_serial / t_sweep_parallel,
              s_serial == s_parallel ? "yes" : "NO");
  return 0;
}
