#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spherelab/exact_matrix.hpp"
#include "spherelab/hermitian_form.hpp"
#include "spherelab/inertia.hpp"
#include "spherelab/polynomial.hpp"

namespace spherelab {

/// Numerator presented by its Gram form G_{alpha beta} = <A_alpha, A_beta>,
/// i.e. the function ||p(z)||^2. Determines p up to a target unitary.
struct GramMap {
  int n = 0;
  int d = -1;  // numerator degree (-1 for the zero map)
  HermitianForm G{1};
  std::size_t rank = 0;  // minimal target dimension
};

/// Certifies G is positive semidefinite; throws std::domain_error otherwise.
GramMap make_gram_map(HermitianForm G);

/// Denominator q = sum b_alpha z^alpha.
struct Denominator {
  int n = 0;
  ExactPolynomial coeffs;

  int degree() const { return spherelab::degree(coeffs); }
  ExactScalar constant() const;
  /// q_j, the homogeneous part of degree j.
  ExactPolynomial part(int j) const { return homogeneous_part(coeffs, j); }
  /// |q|^2 = b b*.
  HermitianForm squared() const { return squared_modulus(n, coeffs); }

  static Denominator one(int n);
};

/// Rejects the zero polynomial and, for n >= 2, b_0 != 1
/// (std::invalid_argument).
Denominator make_denominator(int n, ExactPolynomial coeffs);

struct SamplingOptions {
  std::uint64_t samples = 10000;
  std::uint64_t seed = 20240601;
  double tol = 1e-7;
};

/// Validity of a denominator on the unit sphere.
struct DenominatorReport {
  bool exact = false;  // n = 1: decided by an exact root test
  bool valid = false;
  double min_abs = 0.0;  // smallest |q| seen (sampled and refined)
  std::vector<std::complex<double>> witness;
  struct Bound {
    int j = 0;  // checks |q_{k-j}| < binom(k, j)
    double max_abs = 0.0;
    double bound = 0.0;
    bool holds = true;
    std::vector<std::complex<double>> witness;
  };
  std::vector<Bound> bounds;  // n >= 2 only
  bool bounds_hold = true;
};

DenominatorReport check_denominator(const Denominator& q, const SamplingOptions& opt = {});

/// A verified rational sphere map p/q.
struct SphereMapForm {
  GramMap gram;
  Denominator den;
  HermitianForm quotient{1};  // H = quotient * (||z||^2 - 1)
  int nu = 0;                 // lowest degree with a nonzero diagonal Gram block
  int d = 0;                  // deg p
  int k = 0;                  // deg q
  SignatureTriple signature;  // of H
};

/// H = ||p||^2 - |q|^2.
HermitianForm hermitian_form(const GramMap& g, const Denominator& q);
HermitianForm hermitian_form(const SphereMapForm& f);

/// Lowest degree with a nonzero diagonal block of G, or -1.
int low_degree(const HermitianForm& G);

enum class VerifyStatus { ok, denominator_vanishes, degree_deficit, not_sphere_map };
std::string to_string(VerifyStatus s);

struct VerifyOutcome {
  VerifyStatus status = VerifyStatus::not_sphere_map;
  std::string message;
  std::optional<SphereMapForm> map;
  std::optional<DenominatorReport> denominator;
  HermitianForm residual{1};
  std::vector<std::pair<int, int>> residual_blocks;
  std::vector<std::complex<double>> witness;  // point on the sphere
  double witness_value = 0.0;                 // H or |q| there
  bool ok() const { return status == VerifyStatus::ok; }
};

/// Order of checks: denominator on the sphere, deg p >= deg q (when
/// q(0) != 0), then exact divisibility of H by ||z||^2 - 1.
VerifyOutcome verify_sphere_map(const GramMap& g, const Denominator& q, const SamplingOptions& opt = {});

/// verify_sphere_map that throws std::domain_error with the message on failure.
SphereMapForm verified(const GramMap& g, const Denominator& q, const SamplingOptions& opt = {});

/// Builds the SphereMapForm fields from an already-known exact quotient
/// (no sampling); throws std::logic_error if H != quotient * (||z||^2 - 1).
SphereMapForm assemble(GramMap g, Denominator q, HermitianForm quotient);

/// One bihomogenised identity: the gap-b blocks of ||p||^2 and |q|^2, each
/// multiplied up to a common bidegree.
struct GapIdentity {
  int gap = 0;
  int bidegree_hol = 0;  // common bidegree (T + b, T)
  int bidegree_anti = 0;
  HermitianForm lhs{1};  // from the Gram
  HermitianForm rhs{1};  // from b b*
  bool holds = false;
  bool trivial() const { return lhs.is_zero() && rhs.is_zero(); }
};

struct GapReport {
  std::vector<GapIdentity> identities;
  bool all_hold = false;
  std::vector<int> failing_gaps;
};

/// Gaps 0..max(deg p, deg q); a negative gap is the conjugate of its mirror.
/// Independent of divide_by_sphere; all gaps pass iff H vanishes on the sphere.
GapReport gap_identities(const GramMap& g, const Denominator& q);
GapReport gap_identities(const SphereMapForm& f);

/// Entries of r with |alpha| = j, |beta| = l only (not mirrored, so not
/// Hermitian in general).
HermitianForm one_sided_block(const HermitianForm& r, int j, int l);

}  // namespace spherelab
