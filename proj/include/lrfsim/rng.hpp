#pragma once

#include <cstdint>
#include <random>

#include "lrfsim/angles.hpp"

namespace lrfsim {

/// One stream per simulation run. Gaussian variates come from Box-Muller on
/// top of mt19937_64 rather than std::normal_distribution, whose algorithm is
/// implementation-defined; this way a seed pins the exact byte sequence of a
/// run on any standard library.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1), 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Zero-mean Gaussian. sigma == 0 consumes no randomness.
  double gaussian(double sigma) {
    if (sigma <= 0.0) return 0.0;
    if (have_spare_) {
      have_spare_ = false;
      return spare_ * sigma;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log() finite
    const double u2 = uniform01();
    const double m = std::sqrt(-2.0 * std::log(u1));
    spare_ = m * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return m * std::cos(kTwoPi * u2) * sigma;
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace lrfsim
