#pragma once

#include <array>
#include <cmath>

#include "bps/common.hpp"
#include "bps/rng.hpp"
#include "bps/stable_law.hpp"

namespace bps {

/// Spherically symmetric alpha-stable motion in R^d with characteristic
/// multiplier exp(-t |z|^alpha). Brownian motion (variance 2t per
/// coordinate) at alpha = 2.
struct MotionSpec {
  double alpha;
  int dim;

  MotionSpec(double alpha_, int dim_) : alpha(alpha_), dim(dim_) {
    require(alpha > 0.0 && alpha <= 2.0, "motion index must lie in (0,2]");
    require(dim >= 1 && dim <= kMaxDim, "dimension must lie in [1,6]");
  }
};

/// Exact-in-law increment over time t. For alpha < 2 the isotropic draw is
/// a Gaussian evaluated at an independent positive (alpha/2)-stable time;
/// d independent one-dimensional stable draws would not be isotropic.
inline void sample_isotropic_increment(const MotionSpec& motion, double t,
                                       Rng& rng, double* out) {
  require(t > 0.0, "increment time must be positive");
  if (motion.alpha == 2.0) {
    const double sd = std::sqrt(2.0 * t);
    for (int i = 0; i < motion.dim; ++i) out[i] = sd * rng.normal();
    return;
  }
  const double s =
      std::pow(t, 2.0 / motion.alpha) * sample_positive_stable(motion.alpha / 2.0, rng);
  const double sd = std::sqrt(2.0 * s);
  for (int i = 0; i < motion.dim; ++i) out[i] = sd * rng.normal();
}

inline std::array<double, kMaxDim> sample_isotropic_increment(
    const MotionSpec& motion, double t, Rng& rng) {
  std::array<double, kMaxDim> x{};
  sample_isotropic_increment(motion, t, rng, x.data());
  return x;
}

}  // namespace bps
