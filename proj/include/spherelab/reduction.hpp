#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spherelab/sphere_map.hpp"

namespace spherelab {

/// Projection Gram P = G_{.S} (G_SS)^+ G_{S.}: the form ||pi(p)||^2 for the
/// orthogonal projection pi onto span{A_alpha : alpha in S}. Throws
/// std::invalid_argument when that span is zero.
HermitianForm projection_gram(const HermitianForm& G, const std::vector<MultiIndex>& S);

/// Same for an arbitrary spanning set: each generator is a coefficient
/// combination sum w_alpha A_alpha.
HermitianForm projection_gram(const HermitianForm& G,
                              const std::vector<std::vector<std::pair<MultiIndex, ExactScalar>>>& generators);

struct TensorStep {
  SphereMapForm map;
  HermitianForm projection{1};
  bool degree_increased = false;
};

/// Replaces pi(p) by pi(p) (x) z: G' = G - P + ||z||^2 P, H' = H + (||z||^2 - 1) P.
TensorStep tensor_E(const SphereMapForm& f, const std::vector<MultiIndex>& S);
TensorStep tensor_E_projection(const SphereMapForm& f, const HermitianForm& P);

/// True iff the Gram block between degrees d and nu is nonzero (or nu = d).
bool is_final(const SphereMapForm& f);

struct Reduction {
  std::vector<SphereMapForm> chain;  // chain[0] is the input
  std::vector<std::vector<MultiIndex>> sets;  // S used at each step
  const SphereMapForm& terminal() const { return chain.back(); }
  std::size_t steps() const { return sets.size(); }
};

/// Tensors the full degree-nu index set while the (d, nu) Gram block
/// vanishes. Throws std::logic_error if a step would raise the degree.
Reduction reduce_to_final(const SphereMapForm& f);

struct CanonicalData {
  int m = 0;
  int k = 0;
  HermitianForm bottom{1};  // G^{(m),(m)}
  HermitianForm cross{1};   // G^{(m+k),(m)}, one-sided
  HermitianForm expected{1};  // q_k conj(q_0) ||z||^{2m}, one-sided
  bool certificate = false;
  bool bottom_invertible = false;
  std::string diagnostic;
};

/// Throws std::invalid_argument for a map that is not final.
CanonicalData canonical_data(const SphereMapForm& f);

}  // namespace spherelab
