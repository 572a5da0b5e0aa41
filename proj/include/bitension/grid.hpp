#ifndef BITENSION_GRID_HPP
#define BITENSION_GRID_HPP

#include <array>
#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "bitension/errors.hpp"
#include "bitension/smooth_fn.hpp"

namespace bitension {

/// Uniform sampling of (lo, hi) with a safety margin kept from the endpoints.
/// Sample i lives at lo + margin + i*step, i = 0..n-1; all points are
/// strictly interior.
struct GridSpec {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t n = 2001;
  double margin = 1e-3;

  void validate() const;
  double step() const {
    return (hi - lo - 2.0 * margin) / static_cast<double>(n - 1);
  }
  double point(std::size_t i) const {
    return lo + margin + static_cast<double>(i) * step();
  }
  std::vector<double> points() const;

  bool operator==(const GridSpec&) const = default;
};

/// Grid samples of a scalar function, with derivative arrays filled lazily by
/// central finite differences. Orders 1-2 use the 5-point O(h^4) stencils,
/// orders 3-4 the 7-point O(h^4) stencils; entries too close to the grid edge
/// for the stencil are NaN.
class NumericProfile {
public:
  NumericProfile() = default;
  NumericProfile(GridSpec grid, std::vector<double> values);

  static NumericProfile sample(const SmoothFn& f, const GridSpec& grid);

  const GridSpec& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  double value(std::size_t i) const { return values_[i]; }

  /// Derivative array of order k (computed on first use, then cached).
  const std::vector<double>& derivative(int k) const;

  /// Full jet at grid index i. Throws StencilError within 3 points of an edge.
  Jet jet_at(std::size_t i) const;

  /// Smallest index with a complete jet (edge trim for the widest stencil).
  static constexpr std::size_t edge = 3;

private:
  GridSpec grid_;
  std::vector<double> values_;
  // lazily filled under a lock; copies share the cache, values never change
  struct DerivCache {
    std::mutex mu;
    std::array<std::vector<double>, 4> d;
  };
  std::shared_ptr<DerivCache> cache_ = std::make_shared<DerivCache>();
};

} // namespace bitension

#endif
