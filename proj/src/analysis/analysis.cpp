#include "spherelab/analysis.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

#include "spherelab/kernels.hpp"
#include "spherelab/multi_index.hpp"

namespace spherelab {

mpz_class equation_count(int n, int d) {
  if (n < 1 || d < 0) throw std::invalid_argument("equation_count needs n >= 1 and d >= 0");
  const mpz_class D = static_cast<unsigned long>(dim_V(n, d));
  mpz_class lower = 0;
  for (int j = 0; j < d; ++j) lower += static_cast<unsigned long>(dim_V(n, j));
  return D * lower + D * (D + 1) / 2;
}

bool equation_count_degree_check(int n, int d_max) {
  const int order = 2 * n - 1;
  if (d_max < order + 1) throw std::invalid_argument("need d_max >= 2n");
  std::vector<mpz_class> v;
  for (int d = 0; d <= d_max; ++d) v.push_back(equation_count(n, d));
  for (int k = 0; k < order; ++k)
    for (std::size_t i = 0; i + 1 < v.size() - static_cast<std::size_t>(k); ++i) v[i] = v[i + 1] - v[i];
  const std::size_t len = v.size() - static_cast<std::size_t>(order);
  for (std::size_t i = 0; i < len; ++i)
    if (v[i] != v[0]) return false;
  return v[0] != 0;
}

StabilizationResult quillen_degree(const HermitianForm& r, int d_max, Arithmetic mode) {
  if (r.is_zero()) throw std::invalid_argument("quillen_degree needs a nonzero form");
  const int m = r.entries().begin()->first.first.degree();
  for (const auto& [k, v] : r.entries())
    if (k.first.degree() != m || k.second.degree() != m)
      throw std::invalid_argument("quillen_degree needs a form of a single bidegree (m, m)");
  StabilizationResult res;
  HermitianForm prod = r;
  std::optional<NegativeDirection> last;
  for (int d = 0; d <= d_max; ++d) {
    if (d > 0) prod = shift(prod);
    res.checked_range = d;
    bool psd = false;
    if (mode == Arithmetic::exact) {
      auto chk = is_psd(prod);
      psd = chk.psd;
      if (!psd) last = std::move(chk.witness);
    } else {
      const auto sig = signature_float(prod);
      psd = sig.triple && sig.triple->negative == 0;
      last.reset();
    }
    res.trajectory.push_back(psd);
    if (psd) {
      res.minimal_d = d;
      break;
    }
  }
  res.witness = std::move(last);
  if (res.minimal_d == 0) res.witness.reset();
  return res;
}

HermitianForm model_family_form(const Rational& alpha_sq) {
  HermitianForm r(2);
  r.add(MultiIndex{2, 0}, MultiIndex{2, 0}, ExactScalar(1));
  r.add(MultiIndex{0, 2}, MultiIndex{0, 2}, ExactScalar(1));
  const Rational mid = 2 - alpha_sq;
  if (mid != 0) r.add(MultiIndex{1, 1}, MultiIndex{1, 1}, ExactScalar(mid));
  return r;
}

int model_family_bound(const Rational& alpha_sq) {
  if (alpha_sq < 0 || alpha_sq >= 4) throw std::invalid_argument("alpha_sq must lie in [0, 4)");
  const Rational t = (2 * alpha_sq - 4) / (4 - alpha_sq);
  if (t <= 0) return 0;
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return static_cast<int>(c.get_si());
}

DegreeBoundReport degree_bound_check(int n, int N, int d) {
  if (n < 2) throw std::invalid_argument("no degree bound exists in one variable");
  if (N < 1 || d < 0) throw std::invalid_argument("degree_bound_check needs N >= 1 and d >= 0");
  DegreeBoundReport r;
  r.n = n;
  r.N = N;
  r.d = d;
  r.bound = Rational(N * (N - 1), 2 * (2 * n - 3));
  r.holds = d <= r.bound;
  r.conjectured = n == 2 ? Rational(2 * N - 3) : Rational(N - 1, n - 1);
  r.bound.canonicalize();
  r.conjectured.canonicalize();
  r.within_conjecture = d <= r.conjectured;
  r.at_conjecture = d == r.conjectured;
  return r;
}

DenominatorValidity denominator_valid(const Denominator& q, const SamplingOptions& opt) {
  DenominatorValidity v;
  v.report = check_denominator(q, opt);
  v.pass = v.report.valid && v.report.bounds_hold;
  v.min_margin = std::numeric_limits<double>::infinity();
  for (const auto& b : v.report.bounds) v.min_margin = std::min(v.min_margin, b.bound - b.max_abs);
  return v;
}

namespace {

constexpr int kMaxVolumeDim = 8;

struct Jacobian {
  int n;
  std::vector<CompiledPoly> comps;

  double det_gram(std::span<const std::complex<double>> z) const {
    using Mat = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxVolumeDim, kMaxVolumeDim>;
    Mat A = Mat::Zero(n, n);
    std::array<std::complex<double>, kMaxVolumeDim> g{};
    const std::span<std::complex<double>> gs(g.data(), static_cast<std::size_t>(n));
    for (const auto& c : comps) {
      c.gradient(z, gs);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) += std::conj(g[static_cast<std::size_t>(i)]) * g[static_cast<std::size_t>(j)];
    }
    return A.determinant().real();
  }
};

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

VolumeEstimate volume_estimate(const ExplicitMap& f, std::uint64_t samples, std::uint64_t seed, Backend backend) {
  if (!f.is_polynomial()) throw std::invalid_argument("volume estimate needs a polynomial map");
  if (f.n > kMaxVolumeDim) throw std::invalid_argument("volume estimate supports n <= 8");
  if (samples < 2) throw std::invalid_argument("volume estimate needs at least two samples");
  // a constant denominator c rescales every component by 1/c
  const std::complex<double> c0 = f.den.begin()->second;
  Jacobian jac{f.n, {}};
  int m = 0;
  for (const auto& p : f.components) {
    FloatPolynomial s;
    for (const auto& [a, c] : p) s.emplace(a, c / c0);
    m = std::max(m, degree(s));
    jac.comps.emplace_back(f.n, s);
  }
  auto integrand = [&](std::span<const std::complex<double>> z) { return jac.det_gram(z); };
  const kernels::MomentSum mom = backend == Backend::omp ? kernels::omp::ball_moments(f.n, samples, seed, integrand)
                                                         : kernels::serial::ball_moments(f.n, samples, seed, integrand);
  const double ball = std::pow(std::numbers::pi, f.n) / factorial(f.n);
  const double cnt = static_cast<double>(mom.count);
  const double mean = mom.sum / cnt;
  const double var = std::max(0.0, (mom.sum_sq - cnt * mean * mean) / (cnt - 1.0));
  VolumeEstimate v;
  v.value = ball * mean;
  v.standard_error = ball * std::sqrt(var / cnt);
  v.samples = samples;
  v.seed = seed;
  v.bound = std::pow(std::numbers::pi, f.n) * std::pow(static_cast<double>(m), f.n) / factorial(f.n);
  v.gap = v.bound - v.value;
  return v;
}

double sampled_minimum(const HermitianForm& r, std::uint64_t samples, std::uint64_t seed) {
  const CompiledForm cf(r);
  const auto scan = kernels::omp::scan_sphere(r.n(), samples, seed, 1,
                                              [&](std::span<const std::complex<double>> z, std::span<double> o) {
                                                o[0] = cf(z);
                                              });
  return scan[0].min;
}

}  // namespace spherelab
