#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spherelab/exact_matrix.hpp"
#include "spherelab/sphere_map.hpp"

namespace spherelab {

/// <z, a> = sum conj(a_i) z_i as a polynomial.
ExactPolynomial inner_with(int n, const std::vector<ExactScalar>& a);

/// phi_a at the Gram level: ||p||^2 = c_a (||z||^2 - 1) + |1 - <z, a>|^2 with
/// c_a = 1 - ||a||^2. Rejects ||a|| >= 1 (std::invalid_argument).
SphereMapForm automorphism_form(const std::vector<ExactScalar>& a);

/// H = sum_j B_j rho^j with rho = ||z||^2 - 1, available when every factor
/// has a constant quotient c_j (so ||p_j||^2 = c_j rho + W_j).
struct ProductExpansion {
  std::vector<Rational> c;
  std::vector<HermitianForm> W;
  std::vector<HermitianForm> B;  // B[0..K]
  bool b0_zero = false;
  bool b1_closed_form = false;  // B_1 = sum c_j prod_{k != j} W_k
  bool bK_closed_form = false;  // B_K = prod c_j
  bool expansion_matches = false;  // sum B_j rho^j == ||p||^2 - |q|^2 from the Grams
};

struct TensorProduct {
  SphereMapForm map;
  std::optional<ProductExpansion> expansion;
};

/// Gram = product of Grams, denominator = product of denominators.
TensorProduct tensor_product(const std::vector<SphereMapForm>& maps, const SamplingOptions& opt = {});

/// p = prod (z - a_j), q = z^m prod (1 - conj(a_j) z) on n = 1. Rejects
/// |a_j| = 1.
SphereMapForm blaschke_1d(int m, const std::vector<ExactScalar>& roots, const SamplingOptions& opt = {});

/// How the matrix M on V(n, m) is written: in the basis making z^{(x)m}
/// orthonormal (coefficients sqrt(multinomial)), or directly as the monomial
/// coefficient vectors of g_m (columns N_alpha with g_m = sum z^alpha N_alpha).
enum class VBasis { orthonormal, monomial };

struct LinearDenomResult {
  std::optional<SphereMapForm> map;
  HermitianForm excess{1};  // ||h||^2 that must be a squared norm
  PsdCheck excess_psd;
  std::optional<bool> annulus;  // diagonal M only: ||a|| <= |lambda| <= 1
  bool top_routes_agree = false;
  std::string message;
  bool accepted() const { return map.has_value(); }
};

/// Linear denominator q = 1 + <z, a>, numerator g_m = M z^{(x)m} plus a
/// degree m+1 part fixed by the sphere identities. Throws
/// std::invalid_argument for ||a|| not in (0, 1), a singular M, or an
/// orthonormal-basis M whose Gram would need irrational entries.
LinearDenomResult construct_linear_denom(const std::vector<ExactScalar>& a, int m, const ExactMatrix& M,
                                         VBasis basis = VBasis::orthonormal, const SamplingOptions& opt = {});

struct GeneralResult {
  std::optional<SphereMapForm> map;
  HermitianForm excess{1};
  PsdCheck excess_psd;
  std::string message;
  bool accepted() const { return map.has_value(); }
};

/// p_{m+j} = q_j (z^{(x)m} (x) v_j), plus one orthogonal block f_{m+k}
/// carrying ||z||^{2m} sum_j |q_j|^2 (1 - ||v_j||^2) ||z||^{2k-2j}. Needs
/// q(0) = 1 and <v_i, v_j> = 1 for i != j (std::invalid_argument otherwise).
GeneralResult construct_general(const Denominator& q, int m, const std::vector<std::vector<ExactScalar>>& v,
                                const SamplingOptions& opt = {});

}  // namespace spherelab
