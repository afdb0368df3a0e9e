#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "bps/common.hpp"
#include "bps/motion.hpp"
#include "bps/quad.hpp"
#include "bps/special.hpp"

namespace bps {

/// J_{d/2-1} with elementary fast paths for odd d.
inline double radial_bessel(int d, double x) {
  const double nu = d / 2.0 - 1.0;
  if (d == 1) {
    // J_{-1/2}
    return std::sqrt(2.0 / (kPi * x)) * std::cos(x);
  }
  if (d == 3) {
    // J_{1/2}
    return std::sqrt(2.0 / (kPi * x)) * std::sin(x);
  }
  if (d == 5) {
    // J_{3/2}
    double core;
    if (x < 0.1) {
      const double x2 = x * x;
      core = x2 / 3.0 * (1.0 - x2 / 10.0 * (1.0 - x2 / 28.0));
    } else {
      core = std::sin(x) / x - std::cos(x);
    }
    return std::sqrt(2.0 / (kPi * x)) * core;
  }
  return bessel_j(nu, x);
}

/// Monotone cubic interpolant (Fritsch-Carlson) on a fixed grid.
class Pchip {
 public:
  Pchip() = default;
  Pchip(std::vector<double> x, std::vector<double> y)
      : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    m_.assign(n, 0.0);
    std::vector<double> d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
      d[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
    m_[0] = d[0];
    m_[n - 1] = d[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (d[i - 1] * d[i] <= 0.0)
        m_[i] = 0.0;
      else
        m_[i] = 2.0 * d[i - 1] * d[i] / (d[i - 1] + d[i]);
    }
  }

  double operator()(double x) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = (it == x_.begin()) ? 0 : (it - x_.begin() - 1);
    i = std::min(i, x_.size() - 2);
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    return y_[i] * (2 * t3 - 3 * t2 + 1) + h * m_[i] * (t3 - 2 * t2 + t) +
           y_[i + 1] * (-2 * t3 + 3 * t2) + h * m_[i + 1] * (t3 - t2);
  }

  double front_x() const { return x_.front(); }
  double back_x() const { return x_.back(); }

 private:
  std::vector<double> x_, y_, m_;
};

/// Transition density of the isotropic alpha-stable motion, its radial
/// time integrals, and related constants. Closed forms for alpha in {1,2};
/// radial Fourier inversion with a cached log-log spline otherwise
/// (supported for d <= 6).
class StableDensity {
 public:
  StableDensity(double alpha, int d) : alpha_(alpha), d_(d) {
    require(alpha > 0.0 && alpha <= 2.0, "density: alpha must lie in (0,2]");
    require(d >= 1 && d <= kMaxDim, "density: dimension must lie in [1,6]");
    if (alpha_ != 1.0 && alpha_ != 2.0) build_spline();
  }

  double alpha() const { return alpha_; }
  int dim() const { return d_; }

  /// p_t at radius r. Uses p_t(x) = t^{-d/alpha} p_1(x t^{-1/alpha}).
  double p(double t, double r) const {
    require(t > 0.0, "transition density needs t > 0");
    require(r >= 0.0, "transition density needs r >= 0");
    const double d = d_;
    if (alpha_ == 2.0)
      return std::pow(4.0 * kPi * t, -d / 2.0) * std::exp(-r * r / (4.0 * t));
    if (alpha_ == 1.0) {
      const double c = std::tgamma((d + 1.0) / 2.0) / std::pow(kPi, (d + 1.0) / 2.0);
      return c * t * std::pow(t * t + r * r, -(d + 1.0) / 2.0);
    }
    const double s = std::pow(t, -1.0 / alpha_);
    return std::pow(t, -d / alpha_) * p1(r * s);
  }

  /// p_1 at radius u (inverted numerically for generic alpha).
  double p1(double u) const {
    if (alpha_ == 2.0 || alpha_ == 1.0) return p(1.0, u);
    if (u <= u_min_) {
      const double f = u / u_min_;
      return p1_zero_ + (p1_min_ - p1_zero_) * f * f;
    }
    if (u >= u_max_) return tail_c_ * std::pow(u, -d_ - alpha_);
    return std::exp(spline_(std::log(u)));
  }

  /// Coefficient of the |x|^{-d-alpha} tail of p_1 (alpha < 2 only),
  /// fitted from the inversion where the power law has set in.
  double tail_constant() const {
    require(alpha_ < 2.0, "Gaussian density has no power tail");
    if (alpha_ == 1.0) {
      return std::tgamma((d_ + 1.0) / 2.0) / std::pow(kPi, (d_ + 1.0) / 2.0);
    }
    return tail_c_;
  }

  /// Q(rho, tau) = int_0^tau p_u(rho) du.
  double time_integral(double rho, double tau) const {
    if (tau <= 0.0) return 0.0;
    const double d = d_;
    if (alpha_ == 2.0) {
      if (rho <= 0.0) {
        require(d_ == 1, "time integral diverges at rho = 0 for d >= 2");
        return std::sqrt(tau / kPi);
      }
      const double a = d / 2.0 - 1.0;
      const double x = rho * rho / (4.0 * tau);
      return std::pow(4.0 * kPi, -d / 2.0) * std::pow(4.0 / (rho * rho), a) *
             upper_gamma(a, x);
    }
    if (alpha_ == 1.0) {
      const double c = std::tgamma((d + 1.0) / 2.0) / std::pow(kPi, (d + 1.0) / 2.0);
      if (d_ == 1) return c / 2.0 * std::log1p(tau * tau / (rho * rho));
      return c / (d - 1.0) *
             (std::pow(rho, 1.0 - d) -
              std::pow(tau * tau + rho * rho, (1.0 - d) / 2.0));
    }
    // Generic alpha: integrate the rescaled density; the integrand peaks
    // near t = rho^alpha and vanishes at both ends.
    const double split = std::clamp(std::pow(rho, alpha_), 1e-12 * tau, tau);
    auto f = [&](double t) { return p(t, rho); };
    double v = adaptive(f, 0.0, split, 1e-9);
    if (split < tau) v += adaptive(f, split, tau, 1e-9);
    return v;
  }

  /// int p_1(x)^q dx over R^d.
  double norm_q(double q) const {
    const double d = d_;
    if (alpha_ == 2.0)
      return std::pow(4.0 * kPi, -d * (q - 1.0) / 2.0) * std::pow(q, -d / 2.0);
    if (alpha_ == 1.0) {
      const double c = std::tgamma((d + 1.0) / 2.0) / std::pow(kPi, (d + 1.0) / 2.0);
      const double b = boost::math::beta(d / 2.0, q * (d + 1.0) / 2.0 - d / 2.0);
      return std::pow(c, q) * surface_area(d) * b / 2.0;
    }
    auto f = [&](double u) { return std::pow(p1(u), q) * std::pow(u, d_ - 1.0); };
    const double body = integrate_panels(f, log_panels(1e-4, u_max_, 8), 32);
    // analytic power tail beyond the spline range
    const double texp = (d_ + alpha_) * q - d_;
    const double tail = std::pow(tail_c_, q) * std::pow(u_max_, -texp) / texp;
    return surface_area(d) * (body + tail);
  }

  /// Riesz constant C(d,alpha) with G f = C |x|^{alpha-d} * f; needs d > alpha.
  double riesz_constant() const {
    require(static_cast<double>(d_) > alpha_,
            "potential operator needs d > alpha (transient regime)");
    return std::tgamma((d_ - alpha_) / 2.0) /
           (std::pow(2.0, alpha_) * std::pow(kPi, d_ / 2.0) *
            std::tgamma(alpha_ / 2.0));
  }

 private:
  /// p_1(u) for u > 0 by radial Fourier inversion,
  /// (2pi)^{-d/2} u^{1-d/2} int_0^inf e^{-s^alpha} s^{d/2} J_{d/2-1}(s u) ds.
  double invert(double u) const {
    const double d = d_;
    if (u == 0.0)
      return std::pow(2.0 * kPi, -d) * surface_area(d) *
             std::tgamma(d / alpha_) / alpha_;
    const double cutoff = std::pow(42.0, 1.0 / alpha_);
    auto f = [&](double s) {
      return std::exp(-std::pow(s, alpha_)) * std::pow(s, d / 2.0) *
             radial_bessel(d_, s * u);
    };
    const double panel = kPi / std::max(u, 1.0);
    double total = 0.0;
    for (double a = 0.0; a < cutoff; a += panel)
      total += gauss_legendre(f, a, std::min(a + panel, cutoff), 16);
    const double v = std::pow(2.0 * kPi, -d / 2.0) * std::pow(u, 1.0 - d / 2.0) * total;
    if (!std::isfinite(v)) throw numeric_error("density inversion failed");
    return v;
  }

  void build_spline() {
    u_min_ = 1e-3;
    u_max_ = 60.0;
    const int n = 360;
    std::vector<double> lx(n), ly(n);
    for (int i = 0; i < n; ++i) {
      const double u = u_min_ * std::pow(u_max_ / u_min_, i / (n - 1.0));
      lx[i] = std::log(u);
      const double v = invert(u);
      if (v <= 0.0) throw numeric_error("density inversion lost positivity");
      ly[i] = std::log(v);
    }
    spline_ = Pchip(lx, ly);
    p1_zero_ = invert(0.0);
    p1_min_ = std::exp(ly.front());
    // fit the tail coefficient where the power law has flattened
    double c = 0.0;
    int cnt = 0;
    for (int i = n - 12; i < n - 1; ++i) {
      c += std::exp(ly[i]) * std::pow(std::exp(lx[i]), d_ + alpha_);
      ++cnt;
    }
    tail_c_ = c / cnt;
  }

  double alpha_;
  int d_;
  double u_min_ = 0.0, u_max_ = 0.0;
  double p1_zero_ = 0.0, p1_min_ = 0.0, tail_c_ = 0.0;
  Pchip spline_;
};

/// Shared per-(alpha,d) cache; building the generic-alpha spline is costly.
inline const StableDensity& density_for(double alpha, int d) {
  static std::mutex mu;
  static std::map<std::pair<double, int>, std::unique_ptr<StableDensity>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{alpha, d}];
  if (!slot) slot = std::make_unique<StableDensity>(alpha, d);
  return *slot;
}

/// Spec-facing wrapper: density of the motion at time t and radius r.
inline double transition_density(const MotionSpec& motion, double t, double r) {
  return density_for(motion.alpha, motion.dim).p(t, r);
}

}  // namespace bps
