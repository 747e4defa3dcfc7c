#include "spherelab/hermitian_form.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace spherelab {

HermitianForm::HermitianForm(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("Hermitian form needs n >= 1");
}

ExactScalar HermitianForm::coeff(const MultiIndex& alpha, const MultiIndex& beta) const {
  auto it = entries_.find({alpha, beta});
  return it == entries_.end() ? ExactScalar{} : it->second;
}

void HermitianForm::accumulate_raw(const MultiIndex& alpha, const MultiIndex& beta, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({alpha, beta}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void HermitianForm::add(const MultiIndex& alpha, const MultiIndex& beta, const ExactScalar& c) {
  if (alpha.n() != n_ || beta.n() != n_) throw std::invalid_argument("multi-index dimension mismatch");
  if (alpha == beta) {
    if (!c.is_real()) throw std::invalid_argument("diagonal Hermitian coefficient must be real");
    accumulate_raw(alpha, beta, c);
    return;
  }
  accumulate_raw(alpha, beta, c);
  accumulate_raw(beta, alpha, c.conj());
}

void HermitianForm::set(const MultiIndex& alpha, const MultiIndex& beta, const ExactScalar& c) {
  if (alpha == beta && !c.is_real()) throw std::invalid_argument("diagonal Hermitian coefficient must be real");
  entries_.erase({alpha, beta});
  entries_.erase({beta, alpha});
  add(alpha, beta, c);
}

int HermitianForm::max_degree() const {
  int d = -1;
  for (const auto& [k, v] : entries_) d = std::max({d, k.first.degree(), k.second.degree()});
  return d;
}

std::vector<MultiIndex> HermitianForm::support() const {
  std::set<MultiIndex> s;
  for (const auto& [k, v] : entries_) {
    s.insert(k.first);
    s.insert(k.second);
  }
  return {s.begin(), s.end()};
}

std::vector<MultiIndex> HermitianForm::diagonal_support() const {
  std::vector<MultiIndex> out;
  for (const auto& [k, v] : entries_)
    if (k.first == k.second) out.push_back(k.first);
  return out;
}

HermitianForm HermitianForm::constant(int n, const Rational& c) {
  HermitianForm r(n);
  r.add(MultiIndex::zero(n), MultiIndex::zero(n), ExactScalar(c));
  return r;
}

HermitianForm HermitianForm::norm_squared(int n) {
  HermitianForm r(n);
  for (int i = 0; i < n; ++i) r.add(MultiIndex::unit(n, i), MultiIndex::unit(n, i), ExactScalar(1));
  return r;
}

HermitianForm HermitianForm::sphere(int n) {
  HermitianForm r = norm_squared(n);
  r.add(MultiIndex::zero(n), MultiIndex::zero(n), ExactScalar(-1));
  return r;
}

HermitianForm& HermitianForm::operator+=(const HermitianForm& o) {
  if (o.n_ != n_) throw std::invalid_argument("form dimension mismatch");
  for (const auto& [k, v] : o.entries_) accumulate_raw(k.first, k.second, v);
  return *this;
}

HermitianForm& HermitianForm::operator-=(const HermitianForm& o) {
  if (o.n_ != n_) throw std::invalid_argument("form dimension mismatch");
  for (const auto& [k, v] : o.entries_) accumulate_raw(k.first, k.second, -v);
  return *this;
}

HermitianForm HermitianForm::operator-() const {
  HermitianForm r(n_);
  for (const auto& [k, v] : entries_) r.entries_.emplace(k, -v);
  return r;
}

HermitianForm scale(const HermitianForm& r, const Rational& c) {
  HermitianForm out(r.n());
  if (sgn(c) == 0) return out;
  const ExactScalar s(c);
  for (const auto& [k, v] : r.entries()) out.accumulate_raw(k.first, k.second, v * s);
  return out;
}

HermitianForm scale(const HermitianForm& r, const ExactScalar& c) {
  if (!c.is_real()) throw std::invalid_argument("scaling a Hermitian form by a non-real scalar");
  return scale(r, c.re());
}

HermitianForm conjugate(const HermitianForm& r) {
  HermitianForm out(r.n());
  for (const auto& [k, v] : r.entries()) out.accumulate_raw(k.first, k.second, v.conj());
  return out;
}

HermitianForm bigraded_part(const HermitianForm& r, int j, int l) {
  HermitianForm out(r.n());
  for (const auto& [k, v] : r.entries()) {
    const int a = k.first.degree();
    const int b = k.second.degree();
    if ((a == j && b == l) || (a == l && b == j)) out.accumulate_raw(k.first, k.second, v);
  }
  return out;
}

HermitianForm form_multiply(const HermitianForm& r, const HermitianForm& s) {
  if (r.n() != s.n()) throw std::invalid_argument("form dimension mismatch");
  HermitianForm out(r.n());
  for (const auto& [k1, v1] : r.entries())
    for (const auto& [k2, v2] : s.entries())
      out.accumulate_raw(k1.first + k2.first, k1.second + k2.second, v1 * v2);
  return out;
}

HermitianForm shift(const HermitianForm& r, int times) {
  HermitianForm out = r;
  const HermitianForm z2 = HermitianForm::norm_squared(r.n());
  for (int t = 0; t < times; ++t) out = form_multiply(out, z2);
  return out;
}

HermitianForm norm_power(int n, int d) {
  if (n < 1 || d < 0) throw std::invalid_argument("norm_power requires n >= 1 and d >= 0");
  HermitianForm out(n);
  for (const auto& alpha : enumerate_degree(n, d))
    out.add(alpha, alpha, ExactScalar(Rational(multinomial(alpha))));
  return out;
}

double eval(const HermitianForm& r, std::span<const std::complex<double>> z) {
  if (static_cast<int>(z.size()) != r.n()) throw std::invalid_argument("point dimension mismatch");
  auto mono = [&](const MultiIndex& a) {
    std::complex<double> v{1.0, 0.0};
    for (int i = 0; i < a.n(); ++i)
      for (int e = 0; e < a[i]; ++e) v *= z[static_cast<std::size_t>(i)];
    return v;
  };
  std::map<MultiIndex, std::complex<double>> cache;
  auto cached = [&](const MultiIndex& a) {
    auto it = cache.find(a);
    if (it == cache.end()) it = cache.emplace(a, mono(a)).first;
    return it->second;
  };
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [k, v] : r.entries()) acc += v.to_complex() * cached(k.first) * std::conj(cached(k.second));
  return acc.real();
}

bool circle_invariant(const HermitianForm& r) {
  return std::all_of(r.entries().begin(), r.entries().end(),
                     [](const auto& e) { return e.first.first.degree() == e.first.second.degree(); });
}

std::vector<std::pair<int, int>> nonzero_blocks(const HermitianForm& r) {
  std::set<std::pair<int, int>> s;
  for (const auto& [k, v] : r.entries()) {
    const int a = k.first.degree();
    const int b = k.second.degree();
    s.insert({std::max(a, b), std::min(a, b)});
  }
  return {s.begin(), s.end()};
}

SphereDivision divide_by_sphere(const HermitianForm& r) {
  const int n = r.n();
  const int top = r.max_degree();
  // split r into bigraded blocks keyed by (|alpha|, |beta|)
  std::map<std::pair<int, int>, HermitianForm> blocks;
  auto block = [&](std::map<std::pair<int, int>, HermitianForm>& m, int j, int l) -> HermitianForm& {
    return m.try_emplace({j, l}, n).first->second;
  };
  for (const auto& [k, v] : r.entries())
    block(blocks, k.first.degree(), k.second.degree()).accumulate_raw(k.first, k.second, v);

  // s^{(j,l)} = shift(s^{(j-1,l-1)}) - r^{(j,l)}, walking each gap diagonal upward
  std::map<std::pair<int, int>, HermitianForm> q;
  HermitianForm candidate(n);
  const HermitianForm z2 = HermitianForm::norm_squared(n);
  for (int gap = -top; gap <= top; ++gap) {
    for (int t = 0;; ++t) {
      const int j = t + std::max(gap, 0);
      const int l = t + std::max(-gap, 0);
      if (j > top - 1 || l > top - 1) break;
      HermitianForm sjl(n);
      if (t > 0) sjl = form_multiply(q.at({j - 1, l - 1}), z2);
      if (auto it = blocks.find({j, l}); it != blocks.end()) sjl -= it->second;
      candidate += sjl;
      q.insert_or_assign({j, l}, std::move(sjl));
    }
  }

  SphereDivision out{std::nullopt, r - form_multiply(candidate, HermitianForm::sphere(n)), {}};
  out.residual_blocks = nonzero_blocks(out.residual);
  if (out.residual.is_zero()) out.quotient = std::move(candidate);
  return out;
}

}  // namespace spherelab
