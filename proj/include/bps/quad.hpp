#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <vector>

#include "bps/common.hpp"

namespace bps {

/// Fixed-order Gauss-Legendre rule on [a,b].
template <typename F>
double gauss_legendre(const F& f, double a, double b, int order = 16) {
  using boost::math::quadrature::gauss;
  switch (order) {
    case 8:
      return gauss<double, 8>::integrate(f, a, b);
    case 16:
      return gauss<double, 16>::integrate(f, a, b);
    case 32:
      return gauss<double, 32>::integrate(f, a, b);
    default:
      return gauss<double, 16>::integrate(f, a, b);
  }
}

/// Adaptive Gauss-Kronrod on [a,b]. Throws numeric_error when the error
/// estimate stays above the requested tolerance.
template <typename F>
double adaptive(const F& f, double a, double b, double rel_tol = 1e-10,
                int max_depth = 14) {
  using boost::math::quadrature::gauss_kronrod;
  double err = 0.0;
  const double v =
      gauss_kronrod<double, 15>::integrate(f, a, b, max_depth, rel_tol, &err);
  const double scale = std::max(std::abs(v), 1e-300);
  if (err / scale > std::max(rel_tol * 100.0, 1e-6) && err > 1e-14)
    throw numeric_error("adaptive quadrature did not converge");
  return v;
}

/// Panel layout for semi-infinite radial/temporal integrals: one linear
/// panel [0, lo] followed by log-spaced panels up to hi.
inline std::vector<double> log_panels(double lo, double hi,
                                      int panels_per_decade = 6) {
  std::vector<double> edges;
  edges.push_back(0.0);
  edges.push_back(lo);
  const double decades = std::log10(hi / lo);
  const int n = std::max(1, static_cast<int>(std::ceil(decades * panels_per_decade)));
  for (int i = 1; i <= n; ++i)
    edges.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / n));
  return edges;
}

/// Integrate f over the panel edges with a fixed GL rule per panel.
template <typename F>
double integrate_panels(const F& f, const std::vector<double>& edges,
                        int order = 16) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    total += gauss_legendre(f, edges[i], edges[i + 1], order);
  return total;
}

}  // namespace bps
