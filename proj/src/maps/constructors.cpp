#include "spherelab/constructors.hpp"

#include <stdexcept>

#include "spherelab/reduction.hpp"

namespace spherelab {

namespace {

Rational norm2(const std::vector<ExactScalar>& a) {
  Rational s = 0;
  for (const auto& c : a) s += c.norm();
  return s;
}

ExactPolynomial one(int n) { return {{MultiIndex::zero(n), ExactScalar(1)}}; }

ExactPolynomial plus(ExactPolynomial p, const ExactPolynomial& q, const ExactScalar& c = ExactScalar(1)) {
  for (const auto& [a, v] : q) {
    auto [it, inserted] = p.try_emplace(a, c * v);
    if (!inserted) it->second += c * v;
  }
  std::erase_if(p, [](const auto& e) { return e.second.is_zero(); });
  return p;
}

std::string witness_text(const PsdCheck& chk) {
  if (!chk.witness) return "";
  std::string s = " (negative direction";
  for (const auto& [a, v] : chk.witness->coords) s += " " + to_string(v) + "*" + a.to_string();
  s += ", value " + to_string(chk.witness->value) + ")";
  return s;
}

}  // namespace

ExactPolynomial inner_with(int n, const std::vector<ExactScalar>& a) {
  if (static_cast<int>(a.size()) != n) throw std::invalid_argument("vector length differs from n");
  ExactPolynomial p;
  for (int i = 0; i < n; ++i)
    if (!a[static_cast<std::size_t>(i)].is_zero()) p.emplace(MultiIndex::unit(n, i), a[static_cast<std::size_t>(i)].conj());
  return p;
}

SphereMapForm automorphism_form(const std::vector<ExactScalar>& a) {
  const int n = static_cast<int>(a.size());
  if (n < 1) throw std::invalid_argument("automorphism needs n >= 1");
  const Rational c = 1 - norm2(a);
  if (sgn(c) <= 0) throw std::invalid_argument("automorphism parameter must satisfy ||a|| < 1");
  const ExactPolynomial q = plus(one(n), inner_with(n, a), ExactScalar(-1));
  HermitianForm G = scale(HermitianForm::sphere(n), c) + squared_modulus(n, q);
  return assemble(make_gram_map(std::move(G)), make_denominator(n, q), HermitianForm::constant(n, c));
}

TensorProduct tensor_product(const std::vector<SphereMapForm>& maps, const SamplingOptions& opt) {
  if (maps.empty()) throw std::invalid_argument("tensor product of no maps");
  const int n = maps.front().gram.n;
  HermitianForm G = HermitianForm::constant(n, 1);
  ExactPolynomial q = one(n);
  for (const auto& f : maps) {
    if (f.gram.n != n) throw std::invalid_argument("tensor factors have different n");
    G = form_multiply(G, f.gram.G);
    q = multiply(q, f.den.coeffs);
  }
  TensorProduct out{verified(make_gram_map(std::move(G)), make_denominator(n, std::move(q)), opt), std::nullopt};

  bool constant_quotients = true;
  for (const auto& f : maps) constant_quotients = constant_quotients && f.quotient.max_degree() == 0;
  if (!constant_quotients) return out;

  // prod_j (c_j t + W_j) as a polynomial in t
  ProductExpansion e;
  const HermitianForm unit = HermitianForm::constant(n, 1);
  std::vector<HermitianForm> poly{unit};
  HermitianForm prodW = unit;
  Rational prodC = 1;
  for (const auto& f : maps) {
    const Rational cj = f.quotient.coeff(MultiIndex::zero(n), MultiIndex::zero(n)).re();
    const HermitianForm Wj = f.den.squared();
    e.c.push_back(cj);
    e.W.push_back(Wj);
    std::vector<HermitianForm> next(poly.size() + 1, HermitianForm(n));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += form_multiply(poly[i], Wj);
      next[i + 1] += scale(poly[i], cj);
    }
    poly = std::move(next);
    prodW = form_multiply(prodW, Wj);
    prodC *= cj;
  }
  poly[0] -= prodW;
  e.B = poly;
  const std::size_t K = maps.size();
  e.b0_zero = e.B[0].is_zero();

  HermitianForm b1(n);
  for (std::size_t j = 0; j < K; ++j) {
    HermitianForm t = HermitianForm::constant(n, e.c[j]);
    for (std::size_t k = 0; k < K; ++k)
      if (k != j) t = form_multiply(t, e.W[k]);
    b1 += t;
  }
  e.b1_closed_form = e.B[1] == b1;
  e.bK_closed_form = e.B[K] == HermitianForm::constant(n, prodC);

  HermitianForm sum(n);
  HermitianForm rho_pow = unit;
  for (std::size_t j = 0; j <= K; ++j) {
    sum += form_multiply(e.B[j], rho_pow);
    rho_pow = form_multiply(rho_pow, HermitianForm::sphere(n));
  }
  e.expansion_matches = sum == hermitian_form(out.map);
  out.expansion = std::move(e);
  return out;
}

SphereMapForm blaschke_1d(int m, const std::vector<ExactScalar>& roots, const SamplingOptions& opt) {
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  ExactPolynomial p = one(1), q{{MultiIndex{m}, ExactScalar(1)}};
  for (const auto& a : roots) {
    if (a.norm() == 1) throw std::invalid_argument("Blaschke root " + to_string(a) + " lies on the unit circle");
    p = multiply(p, ExactPolynomial{{MultiIndex{0}, -a}, {MultiIndex{1}, ExactScalar(1)}});
    ExactPolynomial f{{MultiIndex{0}, ExactScalar(1)}};
    if (!a.is_zero()) f.emplace(MultiIndex{1}, -a.conj());
    q = multiply(q, f);
  }
  return verified(make_gram_map(squared_modulus(1, p)), make_denominator(1, std::move(q)), opt);
}

LinearDenomResult construct_linear_denom(const std::vector<ExactScalar>& a, int m, const ExactMatrix& M, VBasis basis,
                                         const SamplingOptions& opt) {
  const int n = static_cast<int>(a.size());
  if (n < 1 || m < 0) throw std::invalid_argument("need n >= 1 and m >= 0");
  const Rational aa = norm2(a);
  if (sgn(aa) == 0 || aa >= 1) throw std::invalid_argument("need 0 < ||a|| < 1");
  const auto idx = enumerate_degree(n, m);
  const std::size_t D = idx.size();
  if (M.rows() != D || M.cols() != D)
    throw std::invalid_argument("M must be " + std::to_string(D) + "x" + std::to_string(D) + " on V(n, m)");
  if (!inverse(M)) throw std::invalid_argument("M is singular");

  std::vector<Rational> c;
  for (const auto& al : idx) c.emplace_back(multinomial(al));

  // bottom Gram block in monomial coordinates: Y(alpha, beta) = <A_alpha, A_beta>
  const ExactMatrix MM = M.adjoint() * M;
  ExactMatrix Y(D, D);
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j) {
      const ExactScalar& v = MM(j, i);
      if (v.is_zero()) continue;
      if (basis == VBasis::monomial) {
        Y(i, j) = v;
      } else {
        auto r = rational_sqrt(c[i] * c[j]);
        if (!r) throw std::invalid_argument("orthonormal-basis M gives an irrational Gram entry; use the monomial basis");
        Y(i, j) = ExactScalar(*r) * v;
      }
    }
  // the dual family (M^{-1})^* z^{(x)m}, paired with g_m to ||z||^{2m}
  const ExactMatrix Yinv = *inverse(Y);
  ExactMatrix X(D, D);
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j) X(i, j) = ExactScalar(c[i] * c[j]) * Yinv(i, j);

  const HermitianForm Yf = matrix_form(n, idx, Y);
  const HermitianForm Xf = matrix_form(n, idx, X);
  const HermitianForm Zm = norm_power(n, m);
  const ExactPolynomial q1 = inner_with(n, a);
  const HermitianForm Q1 = squared_modulus(n, q1);

  LinearDenomResult out;
  out.excess = shift(Zm - Yf) + form_multiply(Q1, Zm - Xf);
  out.excess_psd = is_psd(out.excess);

  bool diagonal = true;
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j)
      if (i != j && !M(i, j).is_zero()) diagonal = false;
  if (diagonal) {
    bool ok = true;
    for (std::size_t i = 0; i < D; ++i) {
      const Rational l2 = M(i, i).norm();
      const Rational lo = basis == VBasis::monomial ? aa * c[i] : aa;
      const Rational hi = basis == VBasis::monomial ? c[i] : Rational(1);
      ok = ok && lo <= l2 && l2 <= hi;
    }
    out.annulus = ok;
  }

  const HermitianForm top = form_multiply(Q1, Xf) + out.excess;
  const HermitianForm top_dual = shift(Zm) + form_multiply(Q1, Zm) - shift(Yf);
  out.top_routes_agree = top == top_dual;

  if (!out.excess_psd) {
    out.message = "rejected: excess form is not a squared norm" + witness_text(out.excess_psd);
    return out;
  }

  HermitianForm cross(n);
  for (std::size_t i = 0; i < D; ++i)
    for (const auto& [e, ce] : q1) cross.add(idx[i] + e, idx[i], ce * ExactScalar(c[i]));

  const GramMap g = make_gram_map(Yf + cross + top);
  const Denominator q = make_denominator(n, plus(one(n), q1));
  auto v = verify_sphere_map(g, q, opt);
  if (!v.ok()) throw std::logic_error("linear-denominator construction failed verification: " + v.message);
  if (!is_final(*v.map)) throw std::logic_error("linear-denominator construction is not final");
  out.map = std::move(v.map);
  out.message = "constructed";
  return out;
}

GeneralResult construct_general(const Denominator& q, int m, const std::vector<std::vector<ExactScalar>>& v,
                                const SamplingOptions& opt) {
  const int n = q.n;
  const int k = q.degree();
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  if (!(q.constant() == ExactScalar(1))) throw std::invalid_argument("denominator constant term must be 1");
  if (static_cast<int>(v.size()) != k + 1)
    throw std::invalid_argument("need k + 1 = " + std::to_string(k + 1) + " vectors v_0..v_k");
  const std::size_t L = v.front().size();
  for (const auto& x : v)
    if (x.size() != L) throw std::invalid_argument("vectors v_j have different lengths");
  auto pair = [&](std::size_t i, std::size_t j) {
    ExactScalar s;
    for (std::size_t t = 0; t < L; ++t) s += v[i][t] * v[j][t].conj();
    return s;
  };
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (i != j && !(pair(i, j) == ExactScalar(1)))
        throw std::invalid_argument("<v_" + std::to_string(i) + ", v_" + std::to_string(j) + "> = " +
                                    to_string(pair(i, j)) + ", must equal 1");

  std::vector<ExactPolynomial> parts;
  for (int j = 0; j <= k; ++j) parts.push_back(q.part(j));
  const HermitianForm Zm = norm_power(n, m);

  GeneralResult out;
  HermitianForm s(n);
  for (int j = 0; j <= k; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    s += scale(shift(squared_modulus(n, parts[uj]), k - j), 1 - pair(uj, uj).re());
  }
  out.excess = form_multiply(Zm, s);
  out.excess_psd = is_psd(out.excess);
  if (!out.excess_psd) {
    out.message = "rejected: excess form is not a squared norm" + witness_text(out.excess_psd);
    return out;
  }

  HermitianForm blocks(n);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const ExactScalar w = pair(i, j);
      for (const auto& [al, ca] : parts[i])
        for (const auto& [be, cb] : parts[j]) blocks.accumulate_raw(al, be, w * ca * cb.conj());
    }
  const GramMap g = make_gram_map(form_multiply(blocks, Zm) + out.excess);
  auto res = verify_sphere_map(g, q, opt);
  if (!res.ok()) {
    // only the denominator can fail here; the gap identities hold by construction
    out.message = "rejected: " + res.message;
    return out;
  }
  out.map = std::move(res.map);
  out.message = "constructed";
  return out;
}

}  // namespace spherelab
