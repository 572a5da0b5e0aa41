#include "bitension/grid.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace bitension {

void GridSpec::validate() const {
  if (!(margin >= 0.0)) throw ConfigError("GridSpec: margin must be >= 0");
  if (!(lo + margin < hi - margin))
    throw ConfigError("GridSpec: need lo + margin < hi - margin");
  if (n < 9) throw ConfigError("GridSpec: need n >= 9 for the order-4 stencils");
}

std::vector<double> GridSpec::points() const {
  validate();
  std::vector<double> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = point(i);
  return p;
}

NumericProfile::NumericProfile(GridSpec grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  grid_.validate();
  if (values_.size() != grid_.n)
    throw ConfigError("NumericProfile: values length " +
                      std::to_string(values_.size()) + " != grid n " +
                      std::to_string(grid_.n));
}

NumericProfile NumericProfile::sample(const SmoothFn& f, const GridSpec& grid) {
  std::vector<double> v(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) v[i] = f(grid.point(i));
  return NumericProfile(grid, std::move(v));
}

const std::vector<double>& NumericProfile::derivative(int k) const {
  if (k < 1 || k > 4) throw ConfigError("NumericProfile: order must be 1..4");
  const std::lock_guard<std::mutex> lock(cache_->mu);
  auto& d = cache_->d[static_cast<std::size_t>(k - 1)];
  if (!d.empty()) return d;

  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double h = grid_.step();
  const auto& f = values_;
  const std::size_t n = grid_.n;
  d.assign(n, nan);
  switch (k) {
  case 1:
    for (std::size_t i = 2; i + 2 < n; ++i)
      d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) /
             (12.0 * h);
    break;
  case 2:
    for (std::size_t i = 2; i + 2 < n; ++i)
      d[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] -
              f[i + 2]) /
             (12.0 * h * h);
    break;
  case 3:
    for (std::size_t i = 3; i + 3 < n; ++i)
      d[i] = (f[i - 3] - 8.0 * f[i - 2] + 13.0 * f[i - 1] - 13.0 * f[i + 1] +
              8.0 * f[i + 2] - f[i + 3]) /
             (8.0 * h * h * h);
    break;
  case 4:
    for (std::size_t i = 3; i + 3 < n; ++i)
      d[i] = (-f[i - 3] / 6.0 + 2.0 * f[i - 2] - 6.5 * f[i - 1] +
              (28.0 / 3.0) * f[i] - 6.5 * f[i + 1] + 2.0 * f[i + 2] -
              f[i + 3] / 6.0) /
             (h * h * h * h);
    break;
  }
  return d;
}

Jet NumericProfile::jet_at(std::size_t i) const {
  if (i < edge || i + edge >= grid_.n)
    throw StencilError("NumericProfile: jet stencil outside grid at index " +
                       std::to_string(i));
  return {values_[i], derivative(1)[i], derivative(2)[i], derivative(3)[i],
          derivative(4)[i]};
}

} // namespace bitension
