#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>

namespace spherelab {

/// Counter-based generator: every draw is a pure function of
/// (seed, sample index, lane), so any partition of the sample range across
/// threads sees the same numbers on every platform.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

  std::uint64_t bits(std::uint64_t index, std::uint32_t lane) const {
    return mix(key_ ^ mix(index * 0x9e3779b97f4a7c15ULL + lane));
  }

  /// Uniform in the open interval (0, 1).
  double uniform(std::uint64_t index, std::uint32_t lane) const {
    return (static_cast<double>(bits(index, lane) >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal pair from lanes (2k, 2k+1) by Box-Muller.
  std::complex<double> normal_pair(std::uint64_t index, std::uint32_t k) const {
    const double u1 = uniform(index, 2 * k);
    const double u2 = uniform(index, 2 * k + 1);
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    return {rad * std::cos(ang), rad * std::sin(ang)};
  }

 private:
  // splitmix64 finaliser
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }
  std::uint64_t key_;
};

/// Uniform point on the unit sphere of C^n (normalised Gaussian).
inline void sphere_point(const CounterRng& rng, std::uint64_t index, std::span<std::complex<double>> z) {
  double norm2 = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    z[i] = rng.normal_pair(index, static_cast<std::uint32_t>(i));
    norm2 += std::norm(z[i]);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& c : z) c *= inv;
}

/// Uniform point in the unit ball of C^n: radius U^{1/(2n)} along a sphere point.
inline void ball_point(const CounterRng& rng, std::uint64_t index, std::span<std::complex<double>> z) {
  sphere_point(rng, index, z);
  const auto lane = static_cast<std::uint32_t>(2 * z.size());
  const double r = std::pow(rng.uniform(index, lane), 1.0 / (2.0 * static_cast<double>(z.size())));
  for (auto& c : z) c *= r;
}

}  // namespace spherelab
