#include "spherelab/sphere_map.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "spherelab/kernels.hpp"

namespace spherelab {

GramMap make_gram_map(HermitianForm G) {
  const auto idx = G.support();
  const auto ldl = ldl_hermitian(form_matrix(G, idx));
  if (ldl.inertia.negative > 0) throw std::domain_error("Gram form is not positive semidefinite");
  GramMap g;
  g.n = G.n();
  g.d = G.max_degree();
  g.rank = ldl.inertia.positive;
  g.G = std::move(G);
  return g;
}

HermitianForm hermitian_form(const GramMap& g, const Denominator& q) { return g.G - q.squared(); }

HermitianForm hermitian_form(const SphereMapForm& f) { return hermitian_form(f.gram, f.den); }

int low_degree(const HermitianForm& G) {
  int lo = -1;
  for (const auto& [k, v] : G.entries())
    if (k.first == k.second && (lo < 0 || k.first.degree() < lo)) lo = k.first.degree();
  return lo;
}

std::string to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::ok: return "ok";
    case VerifyStatus::denominator_vanishes: return "denominator vanishes near sphere";
    case VerifyStatus::degree_deficit: return "degree of p below degree of q";
    case VerifyStatus::not_sphere_map: return "not a sphere map";
  }
  return "unknown";
}

namespace {

SphereMapForm build(GramMap g, Denominator q, HermitianForm quotient, const HermitianForm& H) {
  SphereMapForm f;
  f.nu = std::max(low_degree(g.G), 0);
  f.d = std::max(g.d, 0);
  f.k = q.degree();
  f.signature = signature(H);
  f.gram = std::move(g);
  f.den = std::move(q);
  f.quotient = std::move(quotient);
  return f;
}

std::string point_text(const std::vector<std::complex<double>>& z) {
  std::ostringstream os;
  os.precision(6);
  os << "(";
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i) os << ", ";
    os << z[i].real() << (z[i].imag() < 0 ? "-" : "+") << std::abs(z[i].imag()) << "i";
  }
  os << ")";
  return os.str();
}

}  // namespace

SphereMapForm assemble(GramMap g, Denominator q, HermitianForm quotient) {
  const HermitianForm H = hermitian_form(g, q);
  if (!(form_multiply(quotient, HermitianForm::sphere(g.n)) == H))
    throw std::logic_error("quotient does not reproduce the Hermitian form");
  return build(std::move(g), std::move(q), std::move(quotient), H);
}

VerifyOutcome verify_sphere_map(const GramMap& g, const Denominator& q, const SamplingOptions& opt) {
  if (g.n != q.n) throw std::invalid_argument("numerator and denominator dimensions differ");
  VerifyOutcome out;
  out.residual = HermitianForm(g.n);

  out.denominator = check_denominator(q, opt);
  const auto& den = *out.denominator;
  if (!den.valid || !den.bounds_hold) {
    out.status = VerifyStatus::denominator_vanishes;
    if (!den.valid) {
      out.witness = den.witness;
      out.witness_value = den.min_abs;
      out.message = "denominator vanishes near sphere at " + point_text(den.witness);
    } else {
      for (const auto& b : den.bounds)
        if (!b.holds) {
          out.witness = b.witness;
          out.witness_value = b.max_abs;
          out.message = "homogeneous part of degree " + std::to_string(q.degree() - b.j) + " exceeds its bound at " +
                        point_text(b.witness);
          break;
        }
    }
    return out;
  }

  if (!q.constant().is_zero() && g.d < q.degree()) {
    out.status = VerifyStatus::degree_deficit;
    out.message = "degree of p (" + std::to_string(g.d) + ") below degree of q (" + std::to_string(q.degree()) + ")";
    return out;
  }

  const HermitianForm H = hermitian_form(g, q);
  auto div = divide_by_sphere(H);
  if (!div.quotient) {
    out.status = VerifyStatus::not_sphere_map;
    out.residual = div.residual;
    out.residual_blocks = div.residual_blocks;
    const CompiledForm ch(H);
    const auto scan = kernels::omp::scan_sphere(
        g.n, opt.samples, opt.seed, 1,
        [&](std::span<const std::complex<double>> z, std::span<double> o) { o[0] = std::abs(ch(z)); });
    const CounterRng rng(opt.seed);
    out.witness.resize(static_cast<std::size_t>(g.n));
    sphere_point(rng, scan[0].argmax, out.witness);
    out.witness_value = ch(out.witness);
    std::ostringstream os;
    os << "not a sphere map: ||p||^2 - |q|^2 = " << out.witness_value << " at " << point_text(out.witness);
    out.message = os.str();
    return out;
  }

  out.status = VerifyStatus::ok;
  out.message = "sphere map";
  out.map = build(g, q, std::move(*div.quotient), H);
  return out;
}

SphereMapForm verified(const GramMap& g, const Denominator& q, const SamplingOptions& opt) {
  auto out = verify_sphere_map(g, q, opt);
  if (!out.ok()) throw std::domain_error(out.message);
  return std::move(*out.map);
}

HermitianForm one_sided_block(const HermitianForm& r, int j, int l) {
  HermitianForm out(r.n());
  for (const auto& [k, v] : r.entries())
    if (k.first.degree() == j && k.second.degree() == l) out.accumulate_raw(k.first, k.second, v);
  return out;
}

GapReport gap_identities(const GramMap& g, const Denominator& q) {
  const HermitianForm bb = q.squared();
  const int D = std::max(g.d, q.degree());
  GapReport rep;
  rep.all_hold = true;
  for (int b = 0; b <= D; ++b) {
    GapIdentity id;
    const int T = D - b;
    id.gap = b;
    id.bidegree_hol = T + b;
    id.bidegree_anti = T;
    id.lhs = HermitianForm(g.n);
    id.rhs = HermitianForm(g.n);
    for (int l = 0; l <= T; ++l) {
      id.lhs += shift(one_sided_block(g.G, l + b, l), T - l);
      id.rhs += shift(one_sided_block(bb, l + b, l), T - l);
    }
    id.holds = id.lhs == id.rhs;
    if (!id.holds) {
      rep.all_hold = false;
      rep.failing_gaps.push_back(b);
    }
    rep.identities.push_back(std::move(id));
  }
  return rep;
}

GapReport gap_identities(const SphereMapForm& f) { return gap_identities(f.gram, f.den); }

}  // namespace spherelab
