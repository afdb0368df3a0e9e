#pragma once

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "bps/common.hpp"

namespace bps {

/// Unnormalized upper incomplete gamma, extended to a > -2 via the
/// recurrence Gamma(a,x) = (Gamma(a+1,x) - x^a e^{-x}) / a.
inline double upper_gamma(double a, double x) {
  if (a > 0.0) return boost::math::tgamma(a, x);
  if (a == 0.0) return boost::math::expint(1, x);
  return (upper_gamma(a + 1.0, x) - std::pow(x, a) * std::exp(-x)) / a;
}

/// Unnormalized lower incomplete gamma.
inline double lower_gamma(double a, double x) {
  return boost::math::tgamma_lower(a, x);
}

/// Regularized lower incomplete gamma P(a,x).
inline double gamma_p(double a, double x) { return boost::math::gamma_p(a, x); }

inline double bessel_j(double nu, double x) {
  return boost::math::cyl_bessel_j(nu, x);
}

/// Generalized binomial coefficient C(x, k) for real x, integer k >= 0.
inline double binom_real(double x, long k) {
  double c = 1.0;
  for (long j = 0; j < k; ++j) c *= (x - static_cast<double>(j)) / (j + 1.0);
  return c;
}

}  // namespace bps
