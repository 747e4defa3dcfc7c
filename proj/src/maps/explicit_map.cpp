#include "spherelab/explicit_map.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spherelab/kernels.hpp"

namespace spherelab {

namespace {

FloatPolynomial float_one(int n) { return {{MultiIndex::zero(n), {1.0, 0.0}}}; }

template <class Poly>
void check_dims(int n, const Poly& p) {
  for (const auto& [a, c] : p)
    if (a.n() != n) throw std::invalid_argument("coefficient index " + a.to_string() + " has wrong dimension");
}

}  // namespace

bool ExplicitMap::is_polynomial() const { return degree(den) == 0; }

ExplicitMap explicit_exact(int n, std::vector<ExactPolynomial> comps, std::optional<ExactPolynomial> den) {
  ExplicitMap f;
  f.n = n;
  for (auto& p : comps) {
    check_dims(n, p);
    std::erase_if(p, [](const auto& e) { return e.second.is_zero(); });
    f.components.push_back(to_float(p));
  }
  ExactPolynomial q = den ? std::move(*den) : ExactPolynomial{{MultiIndex::zero(n), ExactScalar(1)}};
  check_dims(n, q);
  f.den = to_float(q);
  f.exact_components = std::move(comps);
  f.exact_den = std::move(q);
  return f;
}

ExplicitMap explicit_float(int n, std::vector<FloatPolynomial> comps, std::optional<FloatPolynomial> den) {
  ExplicitMap f;
  f.n = n;
  for (const auto& p : comps) check_dims(n, p);
  f.components = std::move(comps);
  f.den = den ? std::move(*den) : float_one(n);
  check_dims(n, f.den);
  return f;
}

GramMap gram_from_explicit(const ExplicitMap& f) {
  if (!f.exact_components) throw std::invalid_argument("exact Gram needs exact coefficients");
  HermitianForm G(f.n);
  for (const auto& p : *f.exact_components)
    for (const auto& [a, ca] : p)
      for (const auto& [b, cb] : p) G.accumulate_raw(a, b, ca * cb.conj());
  return make_gram_map(std::move(G));
}

std::map<HermitianForm::Key, std::complex<double>> gram_from_explicit_float(const ExplicitMap& f) {
  return expand_float(f.components);
}

ExplicitMap explicit_from_gram(const GramMap& g) {
  const auto comps = psd_factor(g.G);
  std::vector<FloatPolynomial> fl;
  std::vector<ExactPolynomial> ex;
  bool exact = true;
  for (const auto& c : comps) {
    const double s = std::sqrt(c.weight.get_d());
    FloatPolynomial p;
    for (const auto& [a, v] : c.poly) p.emplace(a, s * v.to_complex());
    fl.push_back(std::move(p));
    if (auto r = rational_sqrt(c.weight)) {
      ExactPolynomial e;
      for (const auto& [a, v] : c.poly) e.emplace(a, ExactScalar(*r) * v);
      ex.push_back(std::move(e));
    } else {
      exact = false;
    }
  }
  if (exact) return explicit_exact(g.n, std::move(ex));
  return explicit_float(g.n, std::move(fl));
}

ExplicitMap explicit_from_map(const SphereMapForm& f) {
  ExplicitMap out = explicit_from_gram(f.gram);
  out.den = to_float(f.den.coeffs);
  if (out.exact_components) out.exact_den = f.den.coeffs;
  return out;
}

double gram_distance(const std::map<HermitianForm::Key, std::complex<double>>& a,
                     const std::map<HermitianForm::Key, std::complex<double>>& b) {
  double worst = 0.0;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    worst = std::max(worst, std::abs(v - (it == b.end() ? 0.0 : it->second)));
  }
  for (const auto& [k, v] : b)
    if (!a.contains(k)) worst = std::max(worst, std::abs(v));
  return worst;
}

double gram_distance(const std::map<HermitianForm::Key, std::complex<double>>& a, const HermitianForm& b) {
  std::map<HermitianForm::Key, std::complex<double>> fb;
  for (const auto& [k, v] : b.entries()) fb.emplace(k, v.to_complex());
  return gram_distance(a, fb);
}

namespace {

struct CompiledMap {
  std::vector<CompiledPoly> p;
  CompiledPoly q;
  explicit CompiledMap(const ExplicitMap& f) : q(f.n, f.den) {
    for (const auto& c : f.components) p.emplace_back(f.n, c);
  }
  // ||p||^2 - |q|^2 and |q|^2
  std::pair<double, double> eval(std::span<const std::complex<double>> z) const {
    double s = 0.0;
    for (const auto& c : p) s += std::norm(c(z));
    const double qq = std::norm(q(z));
    return {s - qq, qq};
  }
};

FloatPolynomial linear(int n, std::complex<double> c0, const std::vector<std::complex<double>>& c) {
  FloatPolynomial out;
  if (c0 != 0.0) out.emplace(MultiIndex::zero(n), c0);
  for (int i = 0; i < n; ++i)
    if (c[static_cast<std::size_t>(i)] != 0.0) out.emplace(MultiIndex::unit(n, i), c[static_cast<std::size_t>(i)]);
  return out;
}

FloatPolynomial power(int n, const FloatPolynomial& p, int e) {
  FloatPolynomial out = float_one(n);
  for (int i = 0; i < e; ++i) out = multiply(out, p);
  return out;
}

double norm2(const std::vector<std::complex<double>>& a) {
  double s = 0.0;
  for (const auto& c : a) s += std::norm(c);
  return s;
}

}  // namespace

double sphere_defect(const ExplicitMap& f, const SamplingOptions& opt) {
  const CompiledMap cm(f);
  const auto scan = kernels::omp::scan_sphere(f.n, opt.samples, opt.seed, 1,
                                              [&](std::span<const std::complex<double>> z, std::span<double> o) {
                                                const auto [h, qq] = cm.eval(z);
                                                o[0] = std::abs(h) / std::max(1.0, qq);
                                              });
  return scan[0].max;
}

ComposeResult compose_automorphism(const ExplicitMap& f, const std::vector<std::complex<double>>& a,
                                   AutomorphismSide side, const SamplingOptions& opt) {
  const double aa = norm2(a);
  if (aa >= 1.0) throw std::invalid_argument("automorphism parameter must lie in the open unit ball");
  const double s = std::sqrt(1.0 - aa);
  ComposeResult res;
  const int n = f.n;

  if (side == AutomorphismSide::target) {
    if (a.size() != f.N()) throw std::invalid_argument("target automorphism dimension differs from N");
    // phi_a(p/q) = (a q - L_a p) / (q - <p, a>)
    FloatPolynomial inner;  // <p, a>
    for (std::size_t i = 0; i < f.N(); ++i) add_to(inner, f.components[i], std::conj(a[i]));
    std::vector<FloatPolynomial> comps;
    for (std::size_t i = 0; i < f.N(); ++i) {
      FloatPolynomial c;
      add_to(c, f.den, a[i]);
      add_to(c, inner, -a[i] / (s + 1.0));
      add_to(c, f.components[i], -s);
      comps.push_back(std::move(c));
    }
    FloatPolynomial q = f.den;
    add_to(q, inner, -1.0);
    res.map = explicit_float(n, std::move(comps), std::move(q));

    const CompiledMap before(f), after(res.map);
    const CounterRng rng(opt.seed ^ 0x5bd1e995ULL);
    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    const std::uint64_t m = std::min<std::uint64_t>(opt.samples, 2000);
    for (std::uint64_t i = 0; i < m; ++i) {
      ball_point(rng, i, z);
      const double e = std::abs(after.eval(z).first - (1.0 - aa) * before.eval(z).first);
      res.scaling_error = std::max(res.scaling_error, e);
    }
  } else {
    if (static_cast<int>(a.size()) != n) throw std::invalid_argument("domain automorphism dimension differs from n");
    // phi_a(z)_i = num_i(z) / (1 - <z, a>)
    std::vector<std::complex<double>> ca(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) ca[j] = -std::conj(a[j]);
    const FloatPolynomial den0 = linear(n, 1.0, ca);
    std::vector<FloatPolynomial> num;
    for (int i = 0; i < n; ++i) {
      std::vector<std::complex<double>> c(a.size());
      for (int j = 0; j < n; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        c[uj] = -a[static_cast<std::size_t>(i)] * std::conj(a[uj]) / (s + 1.0) - (i == j ? s : 0.0);
      }
      num.push_back(linear(n, a[static_cast<std::size_t>(i)], c));
    }
    int e = degree(f.den);
    for (const auto& p : f.components) e = std::max(e, degree(p));
    auto substitute = [&](const FloatPolynomial& p) {
      FloatPolynomial out;
      for (const auto& [alpha, c] : p) {
        FloatPolynomial t = power(n, den0, e - alpha.degree());
        for (int i = 0; i < n; ++i) t = multiply(t, power(n, num[static_cast<std::size_t>(i)], alpha[i]));
        add_to(out, t, c);
      }
      return out;
    };
    std::vector<FloatPolynomial> comps;
    for (const auto& p : f.components) comps.push_back(substitute(p));
    res.map = explicit_float(n, std::move(comps), substitute(f.den));
  }
  res.sphere_defect = sphere_defect(res.map, opt);
  return res;
}

ExplicitMap automorphism_explicit(const std::vector<ExactScalar>& a) {
  const int n = static_cast<int>(a.size());
  Rational aa = 0;
  for (const auto& c : a) aa += c.norm();
  if (aa >= 1) throw std::invalid_argument("automorphism parameter must lie in the open unit ball");
  ExactPolynomial den{{MultiIndex::zero(n), ExactScalar(1)}};
  for (int j = 0; j < n; ++j)
    if (!a[static_cast<std::size_t>(j)].is_zero()) den.emplace(MultiIndex::unit(n, j), -a[static_cast<std::size_t>(j)].conj());
  if (auto s = rational_sqrt(1 - aa)) {
    std::vector<ExactPolynomial> comps;
    for (int i = 0; i < n; ++i) {
      const auto& ai = a[static_cast<std::size_t>(i)];
      ExactPolynomial c;
      if (!ai.is_zero()) c.emplace(MultiIndex::zero(n), ai);
      for (int j = 0; j < n; ++j) {
        ExactScalar v = -ai * a[static_cast<std::size_t>(j)].conj() / ExactScalar(*s + 1);
        if (i == j) v -= ExactScalar(*s);
        if (!v.is_zero()) c.emplace(MultiIndex::unit(n, j), v);
      }
      comps.push_back(std::move(c));
    }
    return explicit_exact(n, std::move(comps), std::move(den));
  }
  const double s = std::sqrt(Rational(1 - aa).get_d());
  std::vector<FloatPolynomial> comps;
  for (int i = 0; i < n; ++i) {
    const auto ai = a[static_cast<std::size_t>(i)].to_complex();
    std::vector<std::complex<double>> c(a.size());
    for (int j = 0; j < n; ++j)
      c[static_cast<std::size_t>(j)] =
          -ai * std::conj(a[static_cast<std::size_t>(j)].to_complex()) / (s + 1.0) - (i == j ? s : 0.0);
    comps.push_back(linear(n, ai, c));
  }
  return explicit_float(n, std::move(comps), to_float(den));
}

}  // namespace spherelab
