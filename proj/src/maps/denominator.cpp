#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "spherelab/kernels.hpp"
#include "spherelab/sphere_map.hpp"
#include "spherelab/unit_circle.hpp"

namespace spherelab {

ExactScalar Denominator::constant() const {
  auto it = coeffs.find(MultiIndex::zero(n));
  return it == coeffs.end() ? ExactScalar() : it->second;
}

Denominator Denominator::one(int n) {
  Denominator q;
  q.n = n;
  q.coeffs.emplace(MultiIndex::zero(n), ExactScalar(1));
  return q;
}

Denominator make_denominator(int n, ExactPolynomial coeffs) {
  std::erase_if(coeffs, [](const auto& e) { return e.second.is_zero(); });
  if (coeffs.empty()) throw std::invalid_argument("denominator is the zero polynomial");
  for (const auto& [a, c] : coeffs)
    if (a.n() != n) throw std::invalid_argument("denominator index " + a.to_string() + " has wrong dimension");
  Denominator q;
  q.n = n;
  q.coeffs = std::move(coeffs);
  if (n >= 2 && !(q.constant() == ExactScalar(1)))
    throw std::invalid_argument("denominator constant term must equal 1 when n >= 2");
  return q;
}

namespace {

using Point = std::vector<std::complex<double>>;

void normalize(Point& z) {
  double s = 0.0;
  for (const auto& c : z) s += std::norm(c);
  s = std::sqrt(s);
  for (auto& c : z) c /= s;
}

// Gauss-Newton for |q| -> 0 along the sphere: step against the tangential
// part of conj(grad q), then renormalise.
Point refine(const CompiledPoly& q, Point z, int iters = 60) {
  const std::size_t n = z.size();
  Point g(n), u(n);
  for (int it = 0; it < iters; ++it) {
    const std::complex<double> v = q(z);
    if (std::abs(v) < 1e-15) break;
    q.gradient(z, g);
    std::complex<double> proj{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) proj += std::conj(g[i]) * std::conj(z[i]);
    double un = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = std::conj(g[i]) - proj * z[i];
      un += std::norm(u[i]);
    }
    if (un < 1e-30) break;
    std::complex<double> t = -v / un;
    double step = std::abs(t) * std::sqrt(un);
    if (step > 0.25) t *= 0.25 / step;
    Point next = z;
    for (std::size_t i = 0; i < n; ++i) next[i] += t * u[i];
    normalize(next);
    if (std::abs(q(next)) >= std::abs(v)) break;
    z = std::move(next);
  }
  return z;
}

}  // namespace

DenominatorReport check_denominator(const Denominator& q, const SamplingOptions& opt) {
  const int n = q.n;
  const int k = q.degree();
  DenominatorReport rep;
  const CompiledPoly cq(n, to_float(q.coeffs));
  std::vector<CompiledPoly> parts;
  for (int j = 0; j < k; ++j) parts.emplace_back(n, to_float(q.part(k - j)));

  const std::size_t width = 1 + parts.size();
  auto f = [&](std::span<const std::complex<double>> z, std::span<double> out) {
    out[0] = std::abs(cq(z));
    for (std::size_t j = 0; j < parts.size(); ++j) out[1 + j] = std::abs(parts[j](z));
  };
  const auto scan = kernels::omp::scan_sphere(n, opt.samples, opt.seed, width, f);
  const CounterRng rng(opt.seed);
  auto sample = [&](std::uint64_t i) {
    Point z(static_cast<std::size_t>(n));
    sphere_point(rng, i, z);
    return z;
  };

  // candidates: best sample plus e_i times 8th roots of unity
  std::vector<Point> starts{sample(scan[0].argmin)};
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < 8; ++r) {
      Point z(static_cast<std::size_t>(n));
      z[static_cast<std::size_t>(i)] = std::polar(1.0, r * std::numbers::pi / 4.0);
      starts.push_back(std::move(z));
    }
  rep.min_abs = std::numeric_limits<double>::infinity();
  for (const auto& s : starts) {
    const Point z = refine(cq, s);
    const double v = std::abs(cq(z));
    if (v < rep.min_abs) {
      rep.min_abs = v;
      rep.witness = z;
    }
  }

  if (n == 1) {
    rep.exact = true;
    std::vector<ExactScalar> c(static_cast<std::size_t>(k + 1));
    for (const auto& [a, v] : q.coeffs) c[static_cast<std::size_t>(a[0])] = v;
    rep.valid = !has_root_on_unit_circle(c);
    if (!rep.valid) {
      if (auto r = root_nearest_unit_circle(c)) {
        rep.witness = {*r / std::abs(*r)};
        rep.min_abs = std::abs(cq(rep.witness));
      }
    }
    return rep;
  }

  rep.valid = rep.min_abs > opt.tol;
  for (int j = 0; j < k; ++j) {
    DenominatorReport::Bound b;
    b.j = j;
    b.max_abs = scan[1 + static_cast<std::size_t>(j)].max;
    b.bound = binomial(k, j).get_d();
    b.holds = b.max_abs < b.bound;
    b.witness = sample(scan[1 + static_cast<std::size_t>(j)].argmax);
    rep.bounds_hold = rep.bounds_hold && b.holds;
    rep.bounds.push_back(std::move(b));
  }
  return rep;
}

}  // namespace spherelab
