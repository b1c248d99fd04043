#ifndef TWINREG_RNG_HPP
#define TWINREG_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "twinreg/types.hpp"

namespace twinreg {

/// Deterministic random source. The standard <random> distributions are
/// implementation-defined, so all transforms are spelled out here; a fixed
/// seed therefore yields a bitwise-identical stream on every run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Integer uniform in [0, n). Rejection-free modulo bias is negligible for
  /// the index ranges used here, but we reject anyway to stay exact.
  std::uint64_t uniform_index(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % n;
  }

  /// Standard normal via Box-Muller. Draws two uniforms per call (no cached
  /// spare), so the stream position is independent of call interleaving.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * M_PI * u2);
  }

  double normal(double mean, double stddev) {
    return mean + stddev * normal();
  }

  Vec3 normal_vec3(double stddev) {
    return Vec3(normal() * stddev, normal() * stddev, normal() * stddev);
  }

  Vec3 uniform_vec3(double lo, double hi) {
    return Vec3(uniform(lo, hi), uniform(lo, hi), uniform(lo, hi));
  }

  /// Uniform direction on the unit sphere.
  Vec3 unit_vector() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * M_PI);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return Vec3(r * std::cos(phi), r * std::sin(phi), z);
  }

  /// Fisher-Yates shuffle of an index vector.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_index(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace twinreg

#endif  // TWINREG_RNG_HPP
