#pragma once

#include <cmath>
#include <vector>

#include "bps/common.hpp"
#include "bps/rng.hpp"
#include "bps/special.hpp"

namespace bps {

/// Critical heavy-tailed offspring law with generating function
/// F(s) = s + (1-s)^{1+beta}/(1+beta). Mean is exactly 1; the tail of the
/// pmf decays like k^{-(2+beta)}.
class OffspringLaw {
 public:
  explicit OffspringLaw(double beta, std::size_t cache_size = 4096)
      : beta_(beta) {
    require(beta > 0.0 && beta < 1.0, "offspring law needs beta in (0,1)");
    build_cache(cache_size);
  }

  double beta() const { return beta_; }
  double tail_index() const { return 2.0 + beta_; }

  /// p_k, by the stable downward recursion seeded at p_2 = beta/2.
  double pmf(long k) const {
    if (k < 0) return 0.0;
    if (k == 0) return 1.0 / (1.0 + beta_);
    if (k == 1) return 0.0;
    double p = beta_ / 2.0;
    for (long j = 2; j < k; ++j)
      p *= (static_cast<double>(j) - 1.0 - beta_) / (static_cast<double>(j) + 1.0);
    return p;
  }

  /// Direct binomial-series evaluation, p_k = C(1+beta,k)(-1)^k/(1+beta);
  /// used as an independent cross-check of the recursion.
  double pmf_binomial(long k) const {
    if (k < 0 || k == 1) return 0.0;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * binom_real(1.0 + beta_, k) / (1.0 + beta_);
  }

  /// Exact tail mass sum_{j>k} p_j = (-1)^{k+1} C(beta,k)/(1+beta), k >= 1.
  double tail_mass(long k) const {
    if (k < 1) return 1.0 - (k == 0 ? pmf(0) : 0.0);
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;
    return sign * binom_real(beta_, k) / (1.0 + beta_);
  }

  double generating_F(double s) const {
    require(s >= 0.0 && s <= 1.0, "generating_F: s must lie in [0,1]");
    return s + std::pow(1.0 - s, 1.0 + beta_) / (1.0 + beta_);
  }

  /// G(s) = F(1-s) - (1-s) = s^{1+beta}/(1+beta).
  double generating_G(double s) const {
    require(s >= 0.0 && s <= 1.0, "generating_G: s must lie in [0,1]");
    return std::pow(s, 1.0 + beta_) / (1.0 + beta_);
  }

  /// Inversion sampling against the cached cdf, continuing the pmf
  /// recursion on the fly for draws beyond the cache.
  long sample(Rng& rng) const {
    const double u = rng.uniform();
    if (u < cdf_[0]) return 0;
    // cdf_ is short and concentrated near the front; scan beats bisection.
    for (std::size_t k = 2; k < cdf_.size(); ++k)
      if (u < cdf_[k]) return static_cast<long>(k);
    double cum = cdf_.back();
    double p = last_p_;
    long k = static_cast<long>(cdf_.size()) - 1;
    while (u >= cum && p > 1e-320) {
      p *= (static_cast<double>(k) - 1.0 - beta_) / (static_cast<double>(k) + 1.0);
      ++k;
      cum += p;
    }
    return k;
  }

 private:
  void build_cache(std::size_t n) {
    cdf_.resize(n);
    cdf_[0] = 1.0 / (1.0 + beta_);
    if (n > 1) cdf_[1] = cdf_[0];
    double p = beta_ / 2.0;
    for (std::size_t k = 2; k < n; ++k) {
      cdf_[k] = cdf_[k - 1] + p;
      last_p_ = p;
      p *= (static_cast<double>(k) - 1.0 - beta_) / (static_cast<double>(k) + 1.0);
    }
  }

  double beta_;
  double last_p_ = 0.0;
  std::vector<double> cdf_;
};

}  // namespace bps
