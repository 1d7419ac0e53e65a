#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace swaybeam {

// Deterministic random stream. Trial substreams are derived from the master
// seed with a counter-based mix, so the randomness consumed by trial k never
// depends on how many workers run or in which order trials are scheduled.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(mix(seed)) {}

  static RandomStream for_trial(std::uint64_t master_seed, std::uint64_t trial_index) {
    return RandomStream(master_seed ^ mix(0x9E3779B97F4A7C15ULL * (trial_index + 1)));
  }

  // Uniform draw on [lo, hi). Degenerate bounds return lo but still consume
  // one engine step, keeping the draw order fixed across configurations.
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform(0.0, 1.0);
    while (u1 <= 0.0) u1 = uniform(0.0, 1.0);
    const double u2 = uniform(0.0, 1.0);
    const double r = std::sqrt(-2.0 * std::log(u1));
    constexpr double two_pi = 6.283185307179586476925286766559;
    spare_ = r * std::sin(two_pi * u2);
    have_spare_ = true;
    return r * std::cos(two_pi * u2);
  }

  // Circularly-symmetric complex Gaussian with the given total variance.
  std::complex<double> complex_normal(double variance) {
    const double s = std::sqrt(variance * 0.5);
    const double re = s * normal();
    const double im = s * normal();
    return {re, im};
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace swaybeam
