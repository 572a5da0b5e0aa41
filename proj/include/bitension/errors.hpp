#ifndef BITENSION_ERRORS_HPP
#define BITENSION_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bitension {

/// Evaluation outside a function's or metric's open interval.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A warp function vanished at an evaluation point (grid touched a pole).
class PoleContactError : public std::runtime_error {
public:
  explicit PoleContactError(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive quadrature exceeded its subdivision budget; the integrand is
/// effectively singular on the requested interval.
class QuadratureError : public std::runtime_error {
public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

/// A finite-difference stencil does not fit inside the available domain/grid.
class StencilError : public std::runtime_error {
public:
  explicit StencilError(const std::string& what) : std::runtime_error(what) {}
};

/// Bad configuration (grid parameters, unknown catalog name, ...).
class ConfigError : public std::invalid_argument {
public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace bitension

#endif
