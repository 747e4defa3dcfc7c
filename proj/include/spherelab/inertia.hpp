#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "spherelab/exact_matrix.hpp"
#include "spherelab/hermitian_form.hpp"
#include "spherelab/polynomial.hpp"

namespace spherelab {

/// Inertia of the coefficient matrix of r over its support (exact LDL*).
SignatureTriple signature(const HermitianForm& r);

/// Floating-point inertia via Hermitian eigendecomposition. `triple` is
/// empty (indeterminate) when some eigenvalue lies within tol * max(1, |lambda|max).
struct FloatSignature {
  std::optional<SignatureTriple> triple;
  std::vector<double> eigenvalues;
};
FloatSignature signature_float(const HermitianForm& r, double tol = 1e-9);

/// Coefficient vector v over the support of r with v* C v < 0.
struct NegativeDirection {
  std::vector<std::pair<MultiIndex, ExactScalar>> coords;
  Rational value;  // v* C v
};

struct PsdCheck {
  bool psd = false;
  std::optional<NegativeDirection> witness;
  explicit operator bool() const { return psd; }
};

PsdCheck is_psd(const HermitianForm& r);

/// weight * |poly(z)|^2 with weight > 0; the sqrt(weight) stays symbolic.
struct SquaredComponent {
  Rational weight;
  std::map<MultiIndex, ExactScalar> poly;
};

/// Exact Hermitian squared-norm decomposition r = sum weight_k |l_k|^2 from
/// LDL*; the component count equals the rank. Throws std::domain_error when
/// r is not PSD.
std::vector<SquaredComponent> psd_factor(const HermitianForm& r);

/// Re-expands sum weight_k |l_k|^2 into a form.
HermitianForm expand_components(int n, const std::vector<SquaredComponent>& comps);

/// Eigen-based factorisation r ~ sum |f_k|^2 dropping eigenvalues below
/// tol * max eigenvalue. Throws std::domain_error on a clearly negative eigenvalue.
std::vector<FloatPolynomial> psd_factor_float(const HermitianForm& r, double tol = 1e-9);

/// Coefficient tensor of sum |f_k|^2 in floating point.
std::map<HermitianForm::Key, std::complex<double>> expand_float(const std::vector<FloatPolynomial>& comps);

}  // namespace spherelab
