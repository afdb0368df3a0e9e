#pragma once

#include <cmath>
#include <complex>

#include "bps/common.hpp"
#include "bps/rng.hpp"

namespace bps {

/// One-dimensional stable law in the parametrization with characteristic
/// function exp{-scale^index |z|^index (1 - i skew sgn(z) tan(pi*index/2))}.
struct StableLawSpec {
  double index;  // in (0,2]
  double scale;  // >= 0
  double skew;   // in [-1,1]; this project only uses 0 and +1

  StableLawSpec(double index_, double scale_, double skew_)
      : index(index_), scale(scale_), skew(skew_) {
    require(index > 0.0 && index <= 2.0, "stable index must lie in (0,2]");
    require(scale >= 0.0, "stable scale must be nonnegative");
    require(std::abs(skew) <= 1.0, "stable skew must lie in [-1,1]");
  }
};

inline std::complex<double> stable_charfn(const StableLawSpec& law, double z) {
  if (z == 0.0 || law.scale == 0.0) return {1.0, 0.0};
  const double a = law.index;
  const double mod = std::pow(law.scale * std::abs(z), a);
  if (a == 2.0) return std::exp(std::complex<double>(-mod, 0.0));
  const double t = std::tan(kPi * a / 2.0);
  return std::exp(std::complex<double>(-mod, mod * law.skew * sgn(z) * t));
}

/// Chambers-Mallows-Stuck draw from the standard law (scale 1) for
/// index != 1. Matches the characteristic function above.
inline double cms_standard(double index, double skew, Rng& rng) {
  const double a = index;
  if (a == 2.0) return std::sqrt(2.0) * rng.normal();
  const double ta = std::tan(kPi * a / 2.0);
  const double theta0 = std::atan(skew * ta) / a;
  const double pre = std::pow(1.0 + skew * skew * ta * ta, 0.5 / a);
  const double theta = rng.uniform(-kPi / 2.0, kPi / 2.0);
  const double w = rng.exponential(1.0);
  const double num = std::sin(a * (theta + theta0));
  const double den = std::pow(std::cos(theta), 1.0 / a);
  const double tail =
      std::pow(std::cos(theta - a * (theta + theta0)) / w, (1.0 - a) / a);
  return pre * num / den * tail;
}

/// Totally skewed draw for index in (1,2): the branching-law attractor case.
inline double sample_skewed_stable(const StableLawSpec& law, Rng& rng) {
  if (law.scale == 0.0) return 0.0;
  require(law.index > 1.0 && law.index < 2.0,
          "sample_skewed_stable supports index in (1,2) only");
  require(law.skew == 1.0, "sample_skewed_stable supports skew = +1 only");
  return law.scale * cms_standard(law.index, 1.0, rng);
}

/// Positive stable subordinator value with Laplace transform e^{-lambda^a},
/// 0 < a < 1. CMS with skew +1, rescaled so the Laplace exponent is exact.
inline double sample_positive_stable(double a, Rng& rng) {
  require(a > 0.0 && a < 1.0, "positive stable needs exponent in (0,1)");
  const double scale = std::pow(std::cos(kPi * a / 2.0), 1.0 / a);
  return scale * cms_standard(a, 1.0, rng);
}

}  // namespace bps
