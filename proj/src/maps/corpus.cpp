#include "spherelab/corpus.hpp"

#include <stdexcept>

#include "spherelab/constructors.hpp"
#include "spherelab/reduction.hpp"

namespace spherelab {

namespace {

using Weights = std::vector<std::pair<MultiIndex, Rational>>;

ExactScalar q_(long p, long d = 1) { return ExactScalar(Rational(p, d)); }

ExactPolynomial poly(std::initializer_list<std::pair<MultiIndex, ExactScalar>> terms) {
  ExactPolynomial p;
  for (const auto& [a, c] : terms)
    if (!c.is_zero()) p[a] += c;
  return p;
}

SphereMapForm polynomial_from_gram(HermitianForm G) {
  const int n = G.n();
  return verified(make_gram_map(std::move(G)), Denominator::one(n));
}

}  // namespace

SphereMapForm diagonal_polynomial_map(int n, const Weights& weights) {
  HermitianForm G(n);
  for (const auto& [a, w] : weights) G.add(a, a, ExactScalar(w));
  return polynomial_from_gram(std::move(G));
}

HermitianForm substitute_linear(const HermitianForm& r, const ExactMatrix& U) {
  const int n = r.n();
  if (U.rows() != static_cast<std::size_t>(n) || U.cols() != static_cast<std::size_t>(n))
    throw std::invalid_argument("substitution matrix must be n x n");
  std::vector<ExactPolynomial> rows;
  for (int i = 0; i < n; ++i) {
    ExactPolynomial l;
    for (int j = 0; j < n; ++j) {
      const auto& c = U(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (!c.is_zero()) l.emplace(MultiIndex::unit(n, j), c);
    }
    rows.push_back(std::move(l));
  }
  std::map<MultiIndex, ExactPolynomial> powers;
  auto image = [&](const MultiIndex& a) -> const ExactPolynomial& {
    auto it = powers.find(a);
    if (it != powers.end()) return it->second;
    ExactPolynomial p{{MultiIndex::zero(n), ExactScalar(1)}};
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < a[i]; ++e) p = multiply(p, rows[static_cast<std::size_t>(i)]);
    return powers.emplace(a, std::move(p)).first->second;
  };
  HermitianForm out(n);
  for (const auto& [key, c] : r.entries()) {
    const auto& pa = image(key.first);
    const auto& pb = image(key.second);
    for (const auto& [g, cg] : pa)
      for (const auto& [h, ch] : pb) out.accumulate_raw(g, h, c * cg * ch.conj());
  }
  return out;
}

ExactMatrix rational_rotation() {
  ExactMatrix U(2, 2);
  U(0, 0) = q_(3, 5);
  U(0, 1) = q_(4, 5);
  U(1, 0) = q_(-4, 5);
  U(1, 1) = q_(3, 5);
  return U;
}

std::vector<CorpusEntry> polynomial_corpus() {
  using M = MultiIndex;
  const Rational one(1);
  std::vector<CorpusEntry> out;
  auto diag = [&](std::string name, int n, const Weights& w) {
    out.push_back({std::move(name), diagonal_polynomial_map(n, w)});
  };
  diag("identity-2", 2, {{M{1, 0}, one}, {M{0, 1}, one}});
  diag("identity-3", 3, {{M{1, 0, 0}, one}, {M{0, 1, 0}, one}, {M{0, 0, 1}, one}});
  diag("whitney", 2, {{M{1, 0}, one}, {M{1, 1}, one}, {M{0, 2}, one}});
  diag("whitney-3", 3, {{M{2, 0, 0}, one}, {M{1, 1, 0}, one}, {M{1, 0, 1}, one}, {M{0, 1, 0}, one}, {M{0, 0, 1}, one}});
  diag("chain-3", 2, {{M{1, 0}, one}, {M{1, 1}, one}, {M{1, 2}, one}, {M{0, 3}, one}});
  diag("chain-4", 2, {{M{1, 0}, one}, {M{1, 1}, one}, {M{1, 2}, one}, {M{1, 3}, one}, {M{0, 4}, one}});
  diag("chain-5", 2,
       {{M{5, 0}, one}, {M{4, 1}, one}, {M{3, 1}, one}, {M{2, 1}, one}, {M{1, 1}, one}, {M{0, 1}, one}});
  diag("mixed-3", 2, {{M{3, 0}, one}, {M{2, 1}, one}, {M{1, 1}, Rational(2)}, {M{0, 2}, one}});
  diag("cyclic-3", 2, {{M{3, 0}, one}, {M{1, 1}, Rational(3)}, {M{0, 3}, one}});
  diag("cyclic-5", 2, {{M{5, 0}, one}, {M{3, 1}, Rational(5)}, {M{1, 2}, Rational(5)}, {M{0, 5}, one}});
  diag("tensor-square-2", 2, {{M{2, 0}, one}, {M{1, 1}, Rational(2)}, {M{0, 2}, one}});
  diag("tensor-square-3", 3,
       {{M{2, 0, 0}, one}, {M{0, 2, 0}, one}, {M{0, 0, 2}, one},
        {M{1, 1, 0}, Rational(2)}, {M{1, 0, 1}, Rational(2)}, {M{0, 1, 1}, Rational(2)}});
  diag("chain-3-n3", 3,
       {{M{3, 0, 0}, one}, {M{2, 1, 0}, one}, {M{2, 0, 1}, one}, {M{1, 1, 0}, one}, {M{1, 0, 1}, one},
        {M{0, 1, 0}, one}, {M{0, 0, 1}, one}});

  const auto U = rational_rotation();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].name != "whitney" && out[i].name != "cyclic-5" && out[i].name != "chain-3") continue;
    out.push_back({out[i].name + "-rotated", polynomial_from_gram(substitute_linear(out[i].map.gram.G, U))});
  }

  // Projection onto A_{z1} + A_{z1 z2} of the Whitney map: blocks of
  // different degrees become coupled.
  const SphereMapForm& w = out[2].map;
  const HermitianForm P = projection_gram(w.gram.G, {{{M{1, 0}, ExactScalar(1)}, {M{1, 1}, ExactScalar(1)}}});
  out.push_back({"whitney-coupled", tensor_E_projection(w, P).map});
  return out;
}

std::vector<CorpusEntry> rational_corpus() {
  using M = MultiIndex;
  std::vector<CorpusEntry> out;
  auto aut = [](std::vector<ExactScalar> a) { return automorphism_form(a); };

  out.push_back({"aut-1", aut({q_(1, 2)})});
  out.push_back({"aut-2", aut({q_(3, 5), q_(0)})});
  out.push_back({"aut-2i", aut({q_(1, 2), ExactScalar(0, Rational(1, 2))})});
  out.push_back({"aut-3", aut({q_(1, 3), q_(1, 3), q_(1, 3)})});

  out.push_back({"tensor-aut-1", tensor_product({aut({q_(1, 2)}), aut({q_(1, 3)})}).map});
  out.push_back({"tensor-aut-2", tensor_product({aut({q_(3, 5), q_(0)}), aut({q_(0), q_(3, 5)})}).map});
  out.push_back({"tensor-aut-2x3",
                 tensor_product({aut({q_(1, 2), q_(0)}), aut({q_(0), q_(1, 2)}), aut({q_(1, 3), q_(1, 3)})}).map});
  {
    const SphereMapForm whitney = diagonal_polynomial_map(2, {{M{1, 0}, 1}, {M{1, 1}, 1}, {M{0, 2}, 1}});
    out.push_back({"tensor-aut-whitney", tensor_product({aut({q_(3, 5), q_(0)}), whitney}).map});
  }

  out.push_back({"blaschke-0", blaschke_1d(0, {q_(1, 2)})});
  out.push_back({"blaschke-1", blaschke_1d(1, {q_(1, 2)})});
  out.push_back({"blaschke-0-2", blaschke_1d(0, {q_(1, 2), q_(-1, 3)})});
  out.push_back({"blaschke-2i", blaschke_1d(2, {ExactScalar(0, Rational(1, 2))})});

  auto linear = [&](std::string name, std::vector<ExactScalar> a, int m, ExactMatrix Mx, VBasis b) {
    auto r = construct_linear_denom(a, m, Mx, b);
    if (!r.accepted()) throw std::logic_error("corpus construction rejected: " + name + ": " + r.message);
    out.push_back({std::move(name), *r.map});
  };
  linear("linear-1", {q_(3, 5)}, 1, ExactMatrix::diagonal({q_(4, 5)}), VBasis::orthonormal);
  linear("linear-1-m2", {q_(1, 2)}, 2, ExactMatrix::diagonal({q_(3, 4)}), VBasis::orthonormal);
  linear("linear-2-diag", {q_(1, 2), q_(0)}, 1, ExactMatrix::diagonal({q_(3, 4), q_(4, 5)}), VBasis::orthonormal);
  linear("linear-2-m2", {q_(1, 2), q_(0)}, 2, ExactMatrix::diagonal({q_(3, 4), q_(1), q_(3, 4)}), VBasis::monomial);
  {
    ExactMatrix Mx(2, 2);
    Mx(0, 0) = q_(3, 4);
    Mx(0, 1) = q_(1, 8);
    Mx(1, 1) = q_(4, 5);
    linear("linear-2-upper", {q_(1, 3), q_(1, 3)}, 1, Mx, VBasis::orthonormal);
  }
  linear("linear-3", {q_(1, 3), q_(0), q_(1, 3)}, 1, ExactMatrix::diagonal({q_(3, 4), q_(4, 5), q_(5, 6)}),
         VBasis::orthonormal);

  auto general = [&](std::string name, int n, ExactPolynomial q, int m, std::vector<std::vector<ExactScalar>> v) {
    auto r = construct_general(make_denominator(n, std::move(q)), m, v);
    if (!r.accepted()) throw std::logic_error("corpus construction rejected: " + name + ": " + r.message);
    out.push_back({std::move(name), *r.map});
  };
  const std::vector<std::vector<ExactScalar>> v3 = {
      {q_(8, 9), q_(2, 9), q_(2, 9)}, {q_(1), q_(1, 2), q_(0)}, {q_(1), q_(0), q_(1, 2)}};
  general("general-1-k1", 1, poly({{M{0}, 1}, {M{1}, q_(3, 5)}}), 1, {{q_(4, 5)}, {q_(5, 4)}});
  general("general-1-k2", 1, poly({{M{0}, 1}, {M{1}, q_(-7, 12)}, {M{2}, q_(1, 12)}}), 1, v3);
  general("general-2-k1", 2, poly({{M{0, 0}, 1}, {M{1, 0}, q_(1, 2)}, {M{0, 1}, q_(1, 3)}}), 1,
          {{q_(4, 5)}, {q_(5, 4)}});
  general("general-2-k1-m2", 2, poly({{M{0, 0}, 1}, {M{1, 0}, q_(1, 2)}, {M{0, 1}, q_(-1, 3)}}), 2,
          {{q_(4, 5)}, {q_(5, 4)}});
  general("general-2-k2", 2,
          poly({{M{0, 0}, 1}, {M{1, 0}, q_(-1, 4)}, {M{0, 1}, q_(-1, 4)}, {M{1, 1}, q_(1, 16)}}), 1, v3);
  return out;
}

std::vector<CorpusEntry> final_descendant_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](const std::vector<CorpusEntry>& src) {
    for (const auto& e : src) {
      // the block identity is stated for q(0) != 0; Blaschke products with a pole at 0 are left out
      if (!e.lowest_terms || e.map.d < 1 || e.map.den.constant().is_zero()) continue;
      out.push_back({e.name + "-final", reduce_to_final(e.map).terminal(), e.lowest_terms});
    }
  };
  add(polynomial_corpus());
  add(rational_corpus());
  return out;
}

}  // namespace spherelab
