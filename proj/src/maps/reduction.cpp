#include "spherelab/reduction.hpp"

#include <stdexcept>

namespace spherelab {

HermitianForm projection_gram(const HermitianForm& G,
                              const std::vector<std::vector<std::pair<MultiIndex, ExactScalar>>>& generators) {
  const auto idx = G.support();
  const std::size_t g = generators.size();
  // B(a, j) = <A_a, u_j>, Gamma(i, j) = <u_i, u_j>
  ExactMatrix B(idx.size(), g);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t j = 0; j < g; ++j)
      for (const auto& [beta, w] : generators[j]) B(a, j) += w.conj() * G.coeff(idx[a], beta);
  ExactMatrix Gamma(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      for (const auto& [alpha, wa] : generators[i])
        for (const auto& [beta, wb] : generators[j]) Gamma(i, j) += wa * wb.conj() * G.coeff(alpha, beta);

  const auto ldl = ldl_hermitian(Gamma);
  std::vector<std::size_t> T;
  for (const auto& st : ldl.steps) T.insert(T.end(), st.pivots.begin(), st.pivots.end());
  if (T.empty()) throw std::invalid_argument("tensored subspace is zero");

  ExactMatrix BT(idx.size(), T.size()), GT(T.size(), T.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t t = 0; t < T.size(); ++t) BT(a, t) = B(a, T[t]);
  for (std::size_t s = 0; s < T.size(); ++s)
    for (std::size_t t = 0; t < T.size(); ++t) GT(s, t) = Gamma(T[s], T[t]);
  const auto inv = inverse(GT);
  if (!inv) throw std::logic_error("pivot block of a positive semidefinite Gram is singular");
  return matrix_form(G.n(), idx, BT * *inv * BT.adjoint());
}

HermitianForm projection_gram(const HermitianForm& G, const std::vector<MultiIndex>& S) {
  std::vector<std::vector<std::pair<MultiIndex, ExactScalar>>> gens;
  for (const auto& s : S) gens.push_back({{s, ExactScalar(1)}});
  return projection_gram(G, gens);
}

TensorStep tensor_E_projection(const SphereMapForm& f, const HermitianForm& P) {
  TensorStep out;
  out.projection = P;
  out.degree_increased = P.max_degree() >= f.d;
  GramMap g = make_gram_map(f.gram.G - P + shift(P));
  out.map = assemble(std::move(g), f.den, f.quotient + P);
  return out;
}

TensorStep tensor_E(const SphereMapForm& f, const std::vector<MultiIndex>& S) {
  if (S.empty()) throw std::invalid_argument("tensored index set is empty");
  return tensor_E_projection(f, projection_gram(f.gram.G, S));
}

bool is_final(const SphereMapForm& f) {
  if (f.nu == f.d) return true;
  return !one_sided_block(f.gram.G, f.d, f.nu).is_zero();
}

Reduction reduce_to_final(const SphereMapForm& f) {
  Reduction red;
  red.chain.push_back(f);
  while (!is_final(red.chain.back())) {
    const auto& cur = red.chain.back();
    auto S = enumerate_degree(cur.gram.n, cur.nu);
    auto step = tensor_E(cur, S);
    if (step.degree_increased || step.map.nu <= cur.nu)
      throw std::logic_error("reduction step raised the degree or failed to raise the order of vanishing");
    red.sets.push_back(std::move(S));
    red.chain.push_back(std::move(step.map));
  }
  return red;
}

CanonicalData canonical_data(const SphereMapForm& f) {
  if (!is_final(f)) throw std::invalid_argument("canonical data needs a final descendant");
  CanonicalData c;
  const int n = f.gram.n;
  c.m = f.nu;
  c.k = f.d - f.nu;
  c.bottom = bigraded_part(f.gram.G, c.m, c.m);
  c.cross = one_sided_block(f.gram.G, c.m + c.k, c.m);
  c.expected = shift(one_sided_block(f.den.squared(), c.k, 0), c.m);
  c.certificate = c.cross == c.expected;
  const auto idx = enumerate_degree(n, c.m);
  c.bottom_invertible = rank(form_matrix(c.bottom, idx)) == idx.size();
  if (f.den.constant().is_zero())
    c.diagnostic = "block identity needs q(0) != 0";
  else if (!c.certificate)
    c.diagnostic = "block identity violated";
  else if (!c.bottom_invertible)
    c.diagnostic = "bottom block singular";
  return c;
}

}  // namespace spherelab
