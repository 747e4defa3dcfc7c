#pragma once

// Sampling kernels over the unit sphere and ball. Each kernel has a plain
// serial reference and an OpenMP version; the OpenMP versions split the
// sample range into fixed-size chunks and combine chunk results in chunk
// order, so their output does not depend on the thread count.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include <omp.h>

#include "spherelab/rng.hpp"

namespace spherelab::kernels {

inline constexpr std::uint64_t kChunk = 4096;

struct ScanResult {
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();
  std::uint64_t argmin = 0;
  std::uint64_t argmax = 0;

  void take(double v, std::uint64_t i) {
    if (v < min || (v == min && i < argmin)) {
      min = v;
      argmin = i;
    }
    if (v > max || (v == max && i < argmax)) {
      max = v;
      argmax = i;
    }
  }
  void merge(const ScanResult& o) {
    take(o.min, o.argmin);
    take(o.max, o.argmax);
  }
};

struct MomentSum {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t count = 0;

  void merge(const MomentSum& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
    count += o.count;
  }
};

namespace serial {

/// Evaluates `width` real functions f(z, out) at `samples` uniform sphere
/// points and tracks per-function extrema and the sample index attaining them.
template <class F>
std::vector<ScanResult> scan_sphere(int n, std::uint64_t samples, std::uint64_t seed, std::size_t width, F&& f) {
  const CounterRng rng(seed);
  std::vector<ScanResult> res(width);
  std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
  std::vector<double> out(width);
  for (std::uint64_t i = 0; i < samples; ++i) {
    sphere_point(rng, i, z);
    f(std::span<const std::complex<double>>(z), std::span<double>(out));
    for (std::size_t k = 0; k < width; ++k) res[k].take(out[k], i);
  }
  return res;
}

/// Sum and sum of squares of f over `samples` uniform ball points.
template <class F>
MomentSum ball_moments(int n, std::uint64_t samples, std::uint64_t seed, F&& f) {
  const CounterRng rng(seed);
  MomentSum m;
  std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
  for (std::uint64_t i = 0; i < samples; ++i) {
    ball_point(rng, i, z);
    const double v = f(std::span<const std::complex<double>>(z));
    m.sum += v;
    m.sum_sq += v * v;
    ++m.count;
  }
  return m;
}

}  // namespace serial

namespace omp {

template <class F>
std::vector<ScanResult> scan_sphere(int n, std::uint64_t samples, std::uint64_t seed, std::size_t width, F&& f) {
  const CounterRng rng(seed);
  const auto chunks = static_cast<std::int64_t>((samples + kChunk - 1) / kChunk);
  std::vector<std::vector<ScanResult>> partial(static_cast<std::size_t>(chunks), std::vector<ScanResult>(width));
#pragma omp parallel
  {
    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    std::vector<double> out(width);
#pragma omp for schedule(static)
    for (std::int64_t c = 0; c < chunks; ++c) {
      auto& res = partial[static_cast<std::size_t>(c)];
      const std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunk;
      const std::uint64_t hi = std::min(samples, lo + kChunk);
      for (std::uint64_t i = lo; i < hi; ++i) {
        sphere_point(rng, i, z);
        f(std::span<const std::complex<double>>(z), std::span<double>(out));
        for (std::size_t k = 0; k < width; ++k) res[k].take(out[k], i);
      }
    }
  }
  std::vector<ScanResult> res(width);
  for (const auto& p : partial)
    for (std::size_t k = 0; k < width; ++k) res[k].merge(p[k]);
  return res;
}

template <class F>
MomentSum ball_moments(int n, std::uint64_t samples, std::uint64_t seed, F&& f) {
  const CounterRng rng(seed);
  const auto chunks = static_cast<std::int64_t>((samples + kChunk - 1) / kChunk);
  std::vector<MomentSum> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel
  {
    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
#pragma omp for schedule(static)
    for (std::int64_t c = 0; c < chunks; ++c) {
      MomentSum m;
      const std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunk;
      const std::uint64_t hi = std::min(samples, lo + kChunk);
      for (std::uint64_t i = lo; i < hi; ++i) {
        ball_point(rng, i, z);
        const double v = f(std::span<const std::complex<double>>(z));
        m.sum += v;
        m.sum_sq += v * v;
        ++m.count;
      }
      partial[static_cast<std::size_t>(c)] = m;
    }
  }
  MomentSum total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

}  // namespace omp

}  // namespace spherelab::kernels
