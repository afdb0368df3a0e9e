#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "bps/common.hpp"
#include "bps/density.hpp"

namespace bps {

/// Radially symmetric integrand f(|x|, l) of a stable integral over
/// R^d x R_+ with Lebesgue control measure. `time_weight` is the
/// coefficient c in the large-l asymptote f ~ c p_l(|x|); it drives the
/// analytic tail completion and is 0 for kernels with compact l-support.
struct RadialKernel {
  std::function<double(double rho, double l)> eval;
  double l_end = std::numeric_limits<double>::infinity();
  double time_weight = 0.0;
  double time_scale = 1.0;  // natural l scale, used for panel layout
  // Temporal points where the kernel formula switches or vanishes with a
  // fractional power; quadrature panels cluster against these from both
  // sides.
  std::vector<double> breaks;
};

/// Kernel of the increment eta1_b - eta1_a: the occupation of a stable
/// bridge started at epoch r in [0,b] and observed over (max(r,a), b].
inline RadialKernel eta1_increment_kernel(const StableDensity& den, double a,
                                          double b) {
  require(0.0 <= a && a <= b, "eta1 increment needs 0 <= a <= b");
  RadialKernel k;
  k.l_end = b;
  k.time_scale = std::max(b, 1e-6);
  if (a > 0.0 && a < b) k.breaks.push_back(a);
  k.eval = [&den, a, b](double rho, double r) {
    if (r >= b) return 0.0;
    if (r <= a) {
      return den.time_integral(rho, b - r) - den.time_integral(rho, a - r);
    }
    return den.time_integral(rho, b - r);
  };
  return k;
}

/// Kernel of the increment eta2_b - eta2_a: families of age l at time 0
/// integrated over process time (a, b].
inline RadialKernel eta2_increment_kernel(const StableDensity& den, double a,
                                          double b) {
  require(0.0 <= a && a <= b, "eta2 increment needs 0 <= a <= b");
  RadialKernel k;
  k.l_end = std::numeric_limits<double>::infinity();
  k.time_weight = b - a;
  k.time_scale = std::max(b, 1e-6);
  k.eval = [&den, a, b](double rho, double l) {
    return den.time_integral(rho, l + b) - den.time_integral(rho, l + a);
  };
  return k;
}

inline RadialKernel eta1_kernel(const StableDensity& den, double t) {
  return eta1_increment_kernel(den, 0.0, t);
}

inline RadialKernel eta2_kernel(const StableDensity& den, double t) {
  return eta2_increment_kernel(den, 0.0, t);
}

}  // namespace bps
