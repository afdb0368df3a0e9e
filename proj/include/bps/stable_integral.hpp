#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "bps/common.hpp"
#include "bps/density.hpp"
#include "bps/kernels.hpp"
#include "bps/quad.hpp"
#include "bps/rng.hpp"
#include "bps/stable_law.hpp"

namespace bps {

/// Stable weight |u|^{1+beta} (1 - i sgn(u) tan(pi(1+beta)/2)); the
/// log-characteristic-function density of a totally skewed stable integral.
inline std::complex<double> stable_weight(double u, double one_plus_beta,
                                          double tan_term) {
  if (u == 0.0) return {0.0, 0.0};
  const double mod = std::pow(std::abs(u), one_plus_beta);
  return {mod, -mod * sgn(u) * tan_term};
}

/// Resolution knobs for the (rho, l) quadrature; the defaults target ~1e-5
/// relative error. Doubling `panels_per_decade` together with `gl_order`
/// gives the independent two-resolution oracle used by the tests.
struct QuadOptions {
  int panels_per_decade = 6;
  int gl_order = 16;
  double l_cut = 1e8;     // times the kernels' natural scale
  double rho_span = 1e8;  // log-span of radial panels below the local scale
};

namespace detail {

/// Apply fn(node, weight) over a GL rule mapped to [a,b].
template <typename Fn>
void gl_nodes(double a, double b, int order, const Fn& fn) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  auto run = [&](const auto& xs, const auto& ws) {
    for (std::size_t q = 0; q < xs.size(); ++q) {
      fn(mid + half * xs[q], ws[q] * half);
      if (xs[q] != 0.0) fn(mid - half * xs[q], ws[q] * half);
    }
  };
  using boost::math::quadrature::gauss;
  if (order >= 32)
    run(gauss<double, 32>::abscissa(), gauss<double, 32>::weights());
  else
    run(gauss<double, 16>::abscissa(), gauss<double, 16>::weights());
}

/// Natural radial extent of time-integrated densities at temporal
/// coordinate l: Gaussian cut for alpha = 2, deep power-law span otherwise.
inline double rho_extent(const StableDensity& den, double l, double scale) {
  if (den.alpha() == 2.0) return 12.0 * std::sqrt(4.0 * (l + scale));
  return 1e4 * std::pow(l + scale, 1.0 / den.alpha());
}

}  // namespace detail

/// Common layout data for the (rho, l) quadratures below.
struct KernelLayout {
  double scale = 1e-6;
  double l_hi = 0.0;
  bool l_finite = true;
};

inline KernelLayout layout_for(const std::vector<const RadialKernel*>& ks,
                               const QuadOptions& opt) {
  KernelLayout lay;
  double l_end = 0.0;
  for (const auto* k : ks) {
    lay.scale = std::max(lay.scale, k->time_scale);
    if (std::isinf(k->l_end))
      lay.l_finite = false;
    else
      l_end = std::max(l_end, k->l_end);
  }
  lay.l_hi = lay.l_finite ? l_end : lay.scale * opt.l_cut;
  return lay;
}

/// Integrate a complex-valued pointwise functional of the kernels over
/// R^d x [0, l_hi] in radial coordinates.
template <typename PointFn>
std::complex<double> integrate_radial(const StableDensity& den,
                                      const KernelLayout& lay,
                                      const PointFn& point,
                                      const QuadOptions& opt) {
  const int d = den.dim();
  const double sd = surface_area(d);
  std::complex<double> total{0.0, 0.0};
  const auto l_edges =
      log_panels(1e-6 * lay.scale, lay.l_hi, opt.panels_per_decade);
  for (std::size_t i = 0; i + 1 < l_edges.size(); ++i) {
    detail::gl_nodes(l_edges[i], l_edges[i + 1], opt.gl_order, [&](double l,
                                                                   double wl) {
      const double extent = detail::rho_extent(den, l, lay.scale);
      std::complex<double> slice{0.0, 0.0};
      const auto r_edges =
          log_panels(extent / opt.rho_span, extent, opt.panels_per_decade);
      for (std::size_t ri = 0; ri + 1 < r_edges.size(); ++ri) {
        detail::gl_nodes(r_edges[ri], r_edges[ri + 1], opt.gl_order,
                         [&](double rho, double wr) {
                           slice += wr * std::pow(rho, d - 1.0) * point(rho, l);
                         });
      }
      total += wl * sd * slice;
    });
  }
  return total;
}

/// Exponent I with Phi = exp(-I) for the joint characteristic function of
/// stable integrals sum_j z_j int K_j dM: I = int int W(sum z_j K_j) dx dl.
/// Kernels must live on a common (rho, l) space (one process component).
inline std::complex<double> stable_integral_exponent(
    const StableDensity& den, const std::vector<RadialKernel>& kernels,
    const std::vector<double>& z, double beta,
    const QuadOptions& opt = QuadOptions{}) {
  require(kernels.size() == z.size(), "one coefficient per kernel");
  const double opb = 1.0 + beta;
  const double tt = std::tan(kPi * opb / 2.0);
  std::vector<const RadialKernel*> ks;
  for (const auto& k : kernels) ks.push_back(&k);
  const KernelLayout lay = layout_for(ks, opt);

  auto point = [&](double rho, double l) {
    double f = 0.0;
    for (std::size_t j = 0; j < kernels.size(); ++j)
      f += z[j] * kernels[j].eval(rho, l);
    return stable_weight(f, opb, tt);
  };
  std::complex<double> total = integrate_radial(den, lay, point, opt);

  if (!lay.l_finite) {
    // Analytic completion of the l tail: each semi-infinite kernel behaves
    // like time_weight * p_l out there, so the slice integral collapses to
    // a multiple of ||p_l||^{1+beta} = l^{-(d/alpha) beta} ||p_1||^{1+beta}.
    double c = 0.0;
    for (std::size_t j = 0; j < kernels.size(); ++j)
      c += z[j] * kernels[j].time_weight;
    const double decay = (den.dim() / den.alpha()) * beta;
    require(decay > 1.0, "stable integral diverges: need d > alpha/beta");
    const double tail_l = std::pow(lay.l_hi, 1.0 - decay) / (decay - 1.0);
    total += stable_weight(c, opb, tt) * den.norm_q(opb) * tail_l;
  }

  if (!std::isfinite(total.real()) || !std::isfinite(total.imag()))
    throw numeric_error("stable integral quadrature failed");
  return total;
}

/// Joint characteristic function of (int K_j dM)_j at coefficients z.
inline std::complex<double> stable_integral_charfn(
    const StableDensity& den, const std::vector<RadialKernel>& kernels,
    const std::vector<double>& z, double beta,
    const QuadOptions& opt = QuadOptions{}) {
  return std::exp(-stable_integral_exponent(den, kernels, z, beta, opt));
}

/// Exponent difference I(joint) - I(group A) - I(group B), computed from
/// the pointwise integrand difference so that the nearly equal exponents
/// never cancel through the quadrature. Long-range dependence lives here.
inline std::complex<double> dependence_exponent_difference(
    const StableDensity& den, const std::vector<RadialKernel>& group_a,
    const std::vector<double>& za, const std::vector<RadialKernel>& group_b,
    const std::vector<double>& zb, double beta,
    const QuadOptions& opt = QuadOptions{}) {
  const double opb = 1.0 + beta;
  const double tt = std::tan(kPi * opb / 2.0);
  std::vector<const RadialKernel*> ks;
  for (const auto& k : group_a) ks.push_back(&k);
  for (const auto& k : group_b) ks.push_back(&k);
  const KernelLayout lay = layout_for(ks, opt);

  auto point = [&](double rho, double l) {
    double fa = 0.0, fb = 0.0;
    for (std::size_t j = 0; j < group_a.size(); ++j)
      fa += za[j] * group_a[j].eval(rho, l);
    for (std::size_t j = 0; j < group_b.size(); ++j)
      fb += zb[j] * group_b[j].eval(rho, l);
    return stable_weight(fa + fb, opb, tt) - stable_weight(fa, opb, tt) -
           stable_weight(fb, opb, tt);
  };
  std::complex<double> total = integrate_radial(den, lay, point, opt);

  if (!lay.l_finite) {
    double ca = 0.0, cb = 0.0;
    for (std::size_t j = 0; j < group_a.size(); ++j)
      ca += za[j] * group_a[j].time_weight;
    for (std::size_t j = 0; j < group_b.size(); ++j)
      cb += zb[j] * group_b[j].time_weight;
    const double decay = (den.dim() / den.alpha()) * beta;
    require(decay > 1.0, "stable integral diverges: need d > alpha/beta");
    const double tail_l = std::pow(lay.l_hi, 1.0 - decay) / (decay - 1.0);
    const auto wdiff = stable_weight(ca + cb, opb, tt) -
                       stable_weight(ca, opb, tt) - stable_weight(cb, opb, tt);
    total += wdiff * den.norm_q(opb) * tail_l;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Discretization and sampling
// ---------------------------------------------------------------------------

/// One cell of a radial discretization of R^d x R_+: the control measure of
/// the annulus-times-interval it represents, and its representative point.
struct Cell {
  double rho, l, measure;
};

/// Radial cell mesh for simulating stable integrals. Log-spaced in both
/// coordinates so heavy tails are captured with few cells.
struct RadialDiscretization {
  std::vector<Cell> cells;
  double truncation_share = 0.0;  // declared bound on the neglected tail
  int d = 0;

  /// Largest relative kernel variation across a cell, probed radially; the
  /// sampler's refinement diagnostic.
  double max_variation(const RadialKernel& k) const {
    double worst = 0.0;
    for (const auto& c : cells) {
      const double v0 = k.eval(c.rho, c.l);
      if (v0 <= 0.0) continue;
      const double v1 = k.eval(c.rho * 1.15, c.l);
      const double v2 = k.eval(c.rho / 1.15, c.l);
      const double spread = std::max(std::abs(v1 - v0), std::abs(v2 - v0));
      worst = std::max(worst, spread / v0);
    }
    return worst;
  }
};

/// Mesh whose temporal range covers [0, l_hi] (linear for compactly
/// supported kernels, log-spaced otherwise) with radius tracking the local
/// density scale.
inline RadialDiscretization make_discretization(const StableDensity& den,
                                                double time_scale, double l_hi,
                                                bool l_finite,
                                                int cells_per_decade = 8,
                                                double rho_span = 1e6) {
  RadialDiscretization disc;
  const int d = den.dim();
  disc.d = d;
  const double sd = surface_area(d);
  std::vector<double> l_edges;
  if (l_finite) {
    const int n = 48;
    for (int i = 0; i <= n; ++i) l_edges.push_back(l_hi * i / n);
  } else {
    l_edges = log_panels(1e-4 * time_scale, l_hi, cells_per_decade);
  }
  for (std::size_t i = 0; i + 1 < l_edges.size(); ++i) {
    const double la = l_edges[i], lb = l_edges[i + 1];
    const double lg = (la > 0.0) ? std::sqrt(la * lb) : 0.5 * (la + lb);
    const double extent = detail::rho_extent(den, lg, time_scale) / 1.2;
    const auto r_edges = log_panels(extent / rho_span, extent, cells_per_decade);
    for (std::size_t ri = 0; ri + 1 < r_edges.size(); ++ri) {
      const double ra = r_edges[ri], rb = r_edges[ri + 1];
      Cell c;
      c.l = lg;
      c.rho = (ra > 0.0) ? std::sqrt(ra * rb) : 0.5 * (ra + rb);
      c.measure = sd * (std::pow(rb, d) - std::pow(ra, d)) / d * (lb - la);
      disc.cells.push_back(c);
    }
  }
  return disc;
}

/// Frozen realization of the stable measure M on a mesh: one totally
/// skewed (1+beta)-stable draw per cell, scaled by measure^{1/(1+beta)}.
/// A path evaluated against several kernels reuses one realization, which
/// is what makes multi-time samples jointly consistent.
struct FrozenMeasure {
  std::vector<double> values;

  static FrozenMeasure draw(const RadialDiscretization& disc, double beta,
                            Rng& rng) {
    FrozenMeasure m;
    m.values.resize(disc.cells.size());
    const double opb = 1.0 + beta;
    for (std::size_t i = 0; i < disc.cells.size(); ++i) {
      const double scale = std::pow(disc.cells[i].measure, 1.0 / opb);
      m.values[i] = scale * cms_standard(opb, 1.0, rng);
    }
    return m;
  }
};

/// int K dM against a frozen M realization.
inline double stable_integral_sample(const RadialKernel& kernel,
                                     const RadialDiscretization& disc,
                                     const FrozenMeasure& m) {
  double acc = 0.0;
  for (std::size_t i = 0; i < disc.cells.size(); ++i) {
    const auto& c = disc.cells[i];
    const double f = kernel.eval(c.rho, c.l);
    if (f != 0.0) acc += f * m.values[i];
  }
  return acc;
}

/// Exact characteristic function of the discretized integral; the sampler's
/// own law, used to separate Monte Carlo error from mesh error.
inline std::complex<double> discrete_charfn(const RadialKernel& kernel,
                                            const RadialDiscretization& disc,
                                            double beta, double z) {
  const double opb = 1.0 + beta;
  const double tt = std::tan(kPi * opb / 2.0);
  std::complex<double> expo{0.0, 0.0};
  for (const auto& c : disc.cells)
    expo += c.measure * stable_weight(z * kernel.eval(c.rho, c.l), opb, tt);
  return std::exp(-expo);
}

}  // namespace bps
