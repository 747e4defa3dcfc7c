#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "spherelab/sphere_map.hpp"

namespace spherelab {

/// A representative p = (p_1, ..., p_N) with denominator q. Float
/// coefficients are always present; exact ones when the data is rational.
struct ExplicitMap {
  int n = 0;
  std::vector<FloatPolynomial> components;
  FloatPolynomial den;
  std::optional<std::vector<ExactPolynomial>> exact_components;
  std::optional<ExactPolynomial> exact_den;

  std::size_t N() const { return components.size(); }
  bool is_polynomial() const;
};

/// Map with exact coefficients; den defaults to 1.
ExplicitMap explicit_exact(int n, std::vector<ExactPolynomial> comps, std::optional<ExactPolynomial> den = {});
ExplicitMap explicit_float(int n, std::vector<FloatPolynomial> comps, std::optional<FloatPolynomial> den = {});

/// G_{alpha beta} = <A_alpha, A_beta>; needs exact coefficients
/// (std::invalid_argument otherwise).
GramMap gram_from_explicit(const ExplicitMap& f);
/// Same in floating point.
std::map<HermitianForm::Key, std::complex<double>> gram_from_explicit_float(const ExplicitMap& f);

/// Representative with N = rank(G) components, from the exact LDL*
/// factorisation (square roots of pivots taken in floating point).
ExplicitMap explicit_from_gram(const GramMap& g);
ExplicitMap explicit_from_map(const SphereMapForm& f);

/// Largest coefficient difference between two float Grams.
double gram_distance(const std::map<HermitianForm::Key, std::complex<double>>& a,
                     const std::map<HermitianForm::Key, std::complex<double>>& b);
double gram_distance(const std::map<HermitianForm::Key, std::complex<double>>& a, const HermitianForm& b);

/// max | ||p||^2 - |q|^2 | over sphere samples (scaled by |q|^2 when |q| > 1).
double sphere_defect(const ExplicitMap& f, const SamplingOptions& opt = {});

enum class AutomorphismSide { target, domain };

struct ComposeResult {
  ExplicitMap map;
  /// max | H(result) - (1 - ||a||^2) H(map) | over ball samples (target side only)
  double scaling_error = 0.0;
  /// sphere_defect of the result
  double sphere_defect = 0.0;
};

/// Composes with phi_a (a in the target ball for the target side, in the
/// source ball for the domain side).
ComposeResult compose_automorphism(const ExplicitMap& f, const std::vector<std::complex<double>>& a,
                                   AutomorphismSide side, const SamplingOptions& opt = {});

/// phi_a as an explicit map; exact when 1 - ||a||^2 is a rational square.
ExplicitMap automorphism_explicit(const std::vector<ExactScalar>& a);

}  // namespace spherelab
