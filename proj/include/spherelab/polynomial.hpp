#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "spherelab/exact_scalar.hpp"
#include "spherelab/hermitian_form.hpp"
#include "spherelab/multi_index.hpp"

namespace spherelab {

/// Holomorphic scalar polynomials, sparse by monomial.
using ExactPolynomial = std::map<MultiIndex, ExactScalar>;
using FloatPolynomial = std::map<MultiIndex, std::complex<double>>;

ExactPolynomial multiply(const ExactPolynomial& p, const ExactPolynomial& q);
FloatPolynomial multiply(const FloatPolynomial& p, const FloatPolynomial& q);
void add_to(FloatPolynomial& acc, const FloatPolynomial& p, std::complex<double> c = 1.0);

FloatPolynomial to_float(const ExactPolynomial& p);
/// Highest degree with a nonzero coefficient; -1 for the zero polynomial.
int degree(const ExactPolynomial& p);
int degree(const FloatPolynomial& p);
ExactPolynomial homogeneous_part(const ExactPolynomial& p, int j);

/// |p|^2 as a Hermitian form.
HermitianForm squared_modulus(int n, const ExactPolynomial& p);

/// Float polynomial compiled for repeated evaluation.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  CompiledPoly(int n, const FloatPolynomial& p);

  std::complex<double> operator()(std::span<const std::complex<double>> z) const;
  /// Writes dp/dz_i into grad.
  void gradient(std::span<const std::complex<double>> z, std::span<std::complex<double>> grad) const;

 private:
  struct Term {
    std::vector<int> exps;
    std::complex<double> c;
  };
  int n_ = 0;
  std::vector<Term> terms_;
};

/// Hermitian form compiled for repeated floating-point evaluation.
class CompiledForm {
 public:
  CompiledForm() = default;
  explicit CompiledForm(const HermitianForm& r);

  double operator()(std::span<const std::complex<double>> z) const;

 private:
  std::vector<std::vector<int>> monomials_;
  struct Entry {
    std::size_t a, b;
    std::complex<double> c;
  };
  std::vector<Entry> entries_;
};

}  // namespace spherelab
