#include "spherelab/inertia.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace spherelab {

SignatureTriple signature(const HermitianForm& r) {
  const auto idx = r.support();
  return ldl_hermitian(form_matrix(r, idx)).inertia;
}

namespace {

Eigen::MatrixXcd to_eigen(const HermitianForm& r, const std::vector<MultiIndex>& idx) {
  const auto m = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      a(i, j) = r.coeff(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]).to_complex();
  return a;
}

}  // namespace

FloatSignature signature_float(const HermitianForm& r, double tol) {
  const auto idx = r.support();
  FloatSignature out;
  if (idx.empty()) {
    out.triple = SignatureTriple{};
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(r, idx), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  out.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  SignatureTriple t;
  for (double v : out.eigenvalues) {
    if (std::abs(v) <= tol * scale) return out;  // indeterminate
    (v > 0 ? t.positive : t.negative)++;
  }
  out.triple = t;
  return out;
}

PsdCheck is_psd(const HermitianForm& r) {
  const auto idx = r.support();
  const auto ldl = ldl_hermitian(form_matrix(r, idx), /*stop_at_negative=*/true);
  PsdCheck out;
  out.psd = !ldl.negative_direction.has_value();
  if (!out.psd) {
    NegativeDirection w;
    const auto& v = *ldl.negative_direction;
    for (std::size_t i = 0; i < idx.size(); ++i)
      if (!v[i].is_zero()) w.coords.emplace_back(idx[i], v[i]);
    // value = v* C v, computed independently of the elimination
    ExactScalar acc;
    for (const auto& [a, va] : w.coords)
      for (const auto& [b, vb] : w.coords) acc += va.conj() * r.coeff(a, b) * vb;
    w.value = acc.re();
    out.witness = std::move(w);
  }
  return out;
}

std::vector<SquaredComponent> psd_factor(const HermitianForm& r) {
  const auto idx = r.support();
  const auto ldl = ldl_hermitian(form_matrix(r, idx));
  if (ldl.inertia.negative > 0) throw std::domain_error("psd_factor: form is not positive semidefinite");
  std::vector<SquaredComponent> out;
  for (const auto& st : ldl.steps) {
    // PSD input only ever takes 1x1 pivots
    SquaredComponent c;
    c.weight = st.block(0, 0).re();
    c.poly.emplace(idx[st.pivots[0]], ExactScalar(1));
    const ExactScalar inv = st.block(0, 0).inverse();
    for (std::size_t k = 0; k < st.rest.size(); ++k)
      if (!st.column(k, 0).is_zero()) c.poly.emplace(idx[st.rest[k]], st.column(k, 0) * inv);
    out.push_back(std::move(c));
  }
  return out;
}

HermitianForm expand_components(int n, const std::vector<SquaredComponent>& comps) {
  HermitianForm out(n);
  for (const auto& c : comps) {
    const ExactScalar w(c.weight);
    for (const auto& [a, ca] : c.poly)
      for (const auto& [b, cb] : c.poly) out.accumulate_raw(a, b, w * ca * cb.conj());
  }
  return out;
}

std::vector<FloatPolynomial> psd_factor_float(const HermitianForm& r, double tol) {
  const auto idx = r.support();
  std::vector<FloatPolynomial> out;
  if (idx.empty()) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(r, idx));
  const Eigen::VectorXd ev = es.eigenvalues();
  const double top = std::max(1.0, ev.cwiseAbs().maxCoeff());
  if (ev.minCoeff() < -tol * top) throw std::domain_error("psd_factor_float: form has a negative eigenvalue");
  // C = U diag(ev) U*, r = y^T C conj(y) = sum_k ev_k |sum_a U(a,k) y_a|^2
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    if (ev(k) <= tol * top) continue;
    FloatPolynomial f;
    const double s = std::sqrt(ev(k));
    for (Eigen::Index a = 0; a < ev.size(); ++a) {
      const std::complex<double> c = s * es.eigenvectors()(a, k);
      if (std::abs(c) > 0.0) f.emplace(idx[static_cast<std::size_t>(a)], c);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::map<HermitianForm::Key, std::complex<double>> expand_float(const std::vector<FloatPolynomial>& comps) {
  std::map<HermitianForm::Key, std::complex<double>> out;
  for (const auto& f : comps)
    for (const auto& [a, ca] : f)
      for (const auto& [b, cb] : f) out[{a, b}] += ca * std::conj(cb);
  return out;
}

}  // namespace spherelab
