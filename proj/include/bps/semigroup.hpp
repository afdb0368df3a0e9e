#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "bps/common.hpp"
#include "bps/density.hpp"
#include "bps/quad.hpp"
#include "bps/special.hpp"

namespace bps {

/// Radial Gaussian bump truncated at a finite support radius. The support
/// cut keeps the function compactly supported (torus runs and Riesz
/// integrals need that); its mass is exact including the cut.
struct RadialBump {
  std::string name = "bump";
  std::vector<double> center;  // length d
  double width = 1.0;
  double amplitude = 1.0;
  double support_radius = 5.0;  // in units of width

  double radius_cut() const { return support_radius * width; }

  double eval_r(double r) const {
    if (r >= radius_cut()) return 0.0;
    return amplitude * std::exp(-r * r / (2.0 * width * width));
  }

  /// Exact integral over R^d, truncation included.
  double mass(int d) const {
    const double x = sqr(radius_cut()) / (2.0 * width * width);
    return amplitude * std::pow(2.0 * kPi, d / 2.0) * std::pow(width, d) *
           gamma_p(d / 2.0, x);
  }
};

/// Average of f(|v - y|) over y on the sphere of radius r about the origin,
/// where |v| = rho: the angular reduction used by all radial convolutions.
template <typename F>
double sphere_average(const F& f, int d, double rho, double r) {
  if (d == 1) return 0.5 * (f(std::abs(rho - r)) + f(rho + r));
  auto g = [&](double theta) {
    const double w =
        std::sqrt(std::max(0.0, rho * rho + r * r - 2.0 * rho * r * std::cos(theta)));
    return f(w) * std::pow(std::sin(theta), d - 2.0);
  };
  const double num = gauss_legendre(g, 0.0, kPi, 32);
  auto s = [&](double theta) { return std::pow(std::sin(theta), d - 2.0); };
  const double den = gauss_legendre(s, 0.0, kPi, 32);
  return num / den;
}

/// (T_t phi)(x) = (p_t * phi)(x) for a radial phi centered at c, evaluated
/// at distance rho = |x - c| from the bump center. t = 0 returns phi.
inline double apply_semigroup(const StableDensity& den, double t,
                              const RadialBump& phi, double rho) {
  require(t >= 0.0, "semigroup needs t >= 0");
  if (t == 0.0) return phi.eval_r(rho);
  const int d = den.dim();
  auto integrand = [&](double r) {
    auto pt = [&](double w) { return den.p(t, w); };
    return phi.eval_r(r) * std::pow(r, d - 1.0) * sphere_average(pt, d, rho, r);
  };
  const double v =
      adaptive(integrand, 0.0, phi.radius_cut(), 1e-9) * surface_area(d);
  return v;
}

/// Riesz potential (G phi)(x) = C(d,alpha) int phi(y) |x-y|^{alpha-d} dy,
/// evaluated at distance rho from the bump center. Needs d > alpha.
inline double potential_operator(const StableDensity& den,
                                 const RadialBump& phi, double rho) {
  const int d = den.dim();
  const double alpha = den.alpha();
  const double c = den.riesz_constant();
  auto kernel = [&](double w) {
    return std::pow(std::max(w, 1e-14), alpha - d);
  };
  auto integrand = [&](double r) {
    return phi.eval_r(r) * std::pow(r, d - 1.0) * sphere_average(kernel, d, rho, r);
  };
  // The |x-y|^{alpha-d} singularity at r = rho is integrable; split there.
  const double cut = phi.radius_cut();
  double v = 0.0;
  if (rho > 0.0 && rho < cut) {
    v = adaptive(integrand, 0.0, rho, 1e-8, 18) +
        adaptive(integrand, rho, cut, 1e-8, 18);
  } else {
    v = adaptive(integrand, 0.0, cut, 1e-8, 18);
  }
  return c * surface_area(d) * v;
}

/// Time-truncated route int_0^tau (T_t phi)(x) dt plus the density-tail
/// remainder; cross-checks the Riesz representation.
inline double potential_time_route(const StableDensity& den,
                                   const RadialBump& phi, double rho,
                                   double tau) {
  auto f = [&](double t) { return apply_semigroup(den, t, phi, rho); };
  double v = 0.0;
  const std::vector<double> edges = log_panels(1e-4 * tau, tau, 6);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    v += gauss_legendre(f, edges[i], edges[i + 1], 16);
  // Beyond tau, T_t phi = int phi(y) p_t(|x-y|) dy exactly; integrate the
  // density in t to a large horizon. The neglected remainder is bounded by
  // p_1(0) tau_big^{1-d/alpha}/(d/alpha - 1), which the caller's tolerance
  // dwarfs. Deliberately avoids the Riesz constant this route cross-checks.
  const int d = den.dim();
  const double tau_big = 1e5;
  auto tail = [&](double r) {
    return den.time_integral(r, tau_big) - den.time_integral(r, tau);
  };
  auto tail_avg = [&](double r) {
    return phi.eval_r(r) * std::pow(r, d - 1.0) * sphere_average(tail, d, rho, r);
  };
  v += surface_area(d) * adaptive(tail_avg, 0.0, phi.radius_cut(), 1e-8, 18);
  return v;
}

}  // namespace bps
