#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bps {

inline constexpr int kMaxDim = 6;
inline constexpr double kPi = 3.14159265358979323846;

/// Thrown when parameters leave the supported (d, alpha, beta) regime.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a quadrature or inversion fails to reach its tolerance.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a simulation exceeds its memory budget; partial results may
/// be flagged by the caller.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Surface area of the unit sphere in R^d.
inline double surface_area(double d) {
  return 2.0 * std::pow(kPi, d / 2.0) / std::tgamma(d / 2.0);
}

/// Volume of the unit ball in R^d.
inline double ball_volume(double d) { return surface_area(d) / d; }

inline double sqr(double x) { return x * x; }

inline int sgn(double x) { return (x > 0) - (x < 0); }

inline void require(bool cond, const std::string& what) {
  if (!cond) throw domain_error(what);
}

}  // namespace bps
