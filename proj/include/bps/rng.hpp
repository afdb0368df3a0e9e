#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace bps {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// xoshiro256++ with a few distribution helpers. One instance per replica;
/// instances are never shared across threads.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed = 0x853c49e6748fea9bULL) { reseed(seed); }

  void reseed(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
    spare_valid_ = false;
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<std::uint64_t>::max();
  }

  result_type operator()() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform on (0,1); never returns 0 or 1.
  double uniform() {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform on (a,b).
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double exponential(double rate) { return -std::log(uniform()) / rate; }

  /// Standard normal via the Marsaglia polar method with one cached spare.
  double normal() {
    if (spare_valid_) {
      spare_valid_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    spare_valid_ = true;
    return u * m;
  }

  /// Poisson count; inversion for small means, PTRS-style normal-based
  /// rejection is avoided in favor of the simple Atkinson split.
  long poisson(double mean) {
    if (mean <= 0) return 0;
    if (mean < 30.0) {
      // Knuth inversion.
      const double limit = std::exp(-mean);
      long k = 0;
      double prod = uniform();
      while (prod > limit) {
        ++k;
        prod *= uniform();
      }
      return k;
    }
    // Split recursively: Poisson(m) = Poisson(m/2) + Poisson(m/2).
    const long half = poisson(mean / 2.0);
    return half + poisson(mean - mean / 2.0);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool spare_valid_ = false;
};

/// Stream for a replica, derived by counter splitting: changing the replica
/// count never reshuffles the streams of existing replicas.
inline Rng replica_stream(std::uint64_t master_seed, std::uint64_t replica) {
  std::uint64_t sm = master_seed ^ (0x9e3779b97f4a7c15ULL * (replica + 1));
  const std::uint64_t derived = splitmix64(sm);
  return Rng(derived);
}

}  // namespace bps
