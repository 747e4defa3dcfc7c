#include "spherelab/polynomial.hpp"

#include <algorithm>

namespace spherelab {

ExactPolynomial multiply(const ExactPolynomial& p, const ExactPolynomial& q) {
  ExactPolynomial out;
  for (const auto& [a, ca] : p)
    for (const auto& [b, cb] : q) {
      auto [it, inserted] = out.try_emplace(a + b, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  return out;
}

FloatPolynomial multiply(const FloatPolynomial& p, const FloatPolynomial& q) {
  FloatPolynomial out;
  for (const auto& [a, ca] : p)
    for (const auto& [b, cb] : q) out[a + b] += ca * cb;
  return out;
}

void add_to(FloatPolynomial& acc, const FloatPolynomial& p, std::complex<double> c) {
  for (const auto& [a, ca] : p) acc[a] += c * ca;
}

FloatPolynomial to_float(const ExactPolynomial& p) {
  FloatPolynomial out;
  for (const auto& [a, c] : p) out.emplace(a, c.to_complex());
  return out;
}

int degree(const ExactPolynomial& p) {
  int d = -1;
  for (const auto& [a, c] : p)
    if (!c.is_zero()) d = std::max(d, a.degree());
  return d;
}

int degree(const FloatPolynomial& p) {
  int d = -1;
  for (const auto& [a, c] : p)
    if (c != 0.0) d = std::max(d, a.degree());
  return d;
}

ExactPolynomial homogeneous_part(const ExactPolynomial& p, int j) {
  ExactPolynomial out;
  for (const auto& [a, c] : p)
    if (a.degree() == j && !c.is_zero()) out.emplace(a, c);
  return out;
}

HermitianForm squared_modulus(int n, const ExactPolynomial& p) {
  HermitianForm out(n);
  for (const auto& [a, ca] : p)
    for (const auto& [b, cb] : p) out.accumulate_raw(a, b, ca * cb.conj());
  return out;
}

CompiledPoly::CompiledPoly(int n, const FloatPolynomial& p) : n_(n) {
  for (const auto& [a, c] : p) {
    if (c == 0.0) continue;
    terms_.push_back({std::vector<int>(a.exponents().begin(), a.exponents().end()), c});
  }
}

namespace {

std::complex<double> ipow(std::complex<double> z, int e) {
  std::complex<double> r{1.0, 0.0};
  for (int k = 0; k < e; ++k) r *= z;
  return r;
}

}  // namespace

std::complex<double> CompiledPoly::operator()(std::span<const std::complex<double>> z) const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& t : terms_) {
    std::complex<double> v = t.c;
    for (int i = 0; i < n_; ++i) v *= ipow(z[static_cast<std::size_t>(i)], t.exps[static_cast<std::size_t>(i)]);
    acc += v;
  }
  return acc;
}

void CompiledPoly::gradient(std::span<const std::complex<double>> z, std::span<std::complex<double>> grad) const {
  std::fill(grad.begin(), grad.end(), std::complex<double>{0.0, 0.0});
  for (const auto& t : terms_) {
    for (int d = 0; d < n_; ++d) {
      const int e = t.exps[static_cast<std::size_t>(d)];
      if (e == 0) continue;
      std::complex<double> v = t.c * static_cast<double>(e);
      for (int i = 0; i < n_; ++i)
        v *= ipow(z[static_cast<std::size_t>(i)], t.exps[static_cast<std::size_t>(i)] - (i == d ? 1 : 0));
      grad[static_cast<std::size_t>(d)] += v;
    }
  }
}

CompiledForm::CompiledForm(const HermitianForm& r) {
  const auto idx = r.support();
  std::map<MultiIndex, std::size_t> pos;
  for (const auto& a : idx) {
    pos.emplace(a, monomials_.size());
    monomials_.emplace_back(a.exponents().begin(), a.exponents().end());
  }
  for (const auto& [k, v] : r.entries()) entries_.push_back({pos.at(k.first), pos.at(k.second), v.to_complex()});
}

double CompiledForm::operator()(std::span<const std::complex<double>> z) const {
  std::vector<std::complex<double>> mono(monomials_.size());
  for (std::size_t m = 0; m < monomials_.size(); ++m) {
    std::complex<double> v{1.0, 0.0};
    for (std::size_t i = 0; i < monomials_[m].size(); ++i) v *= ipow(z[i], monomials_[m][i]);
    mono[m] = v;
  }
  std::complex<double> acc{0.0, 0.0};
  for (const auto& e : entries_) acc += e.c * mono[e.a] * std::conj(mono[e.b]);
  return acc.real();
}

}  // namespace spherelab
