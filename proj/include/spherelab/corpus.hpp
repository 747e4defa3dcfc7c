#pragma once

#include <string>
#include <vector>

#include "spherelab/exact_matrix.hpp"
#include "spherelab/sphere_map.hpp"

namespace spherelab {

struct CorpusEntry {
  std::string name;
  SphereMapForm map;
  /// false for constructions that are not in lowest terms (e.g. a unitary M)
  bool lowest_terms = true;
};

/// Gram diag(weights) on the given monomials, q = 1.
SphereMapForm diagonal_polynomial_map(int n, const std::vector<std::pair<MultiIndex, Rational>>& weights);

/// r(Uz, conj(Uz)) for an n x n matrix U.
HermitianForm substitute_linear(const HermitianForm& r, const ExactMatrix& U);

/// The rotation (3/5, 4/5; -4/5, 3/5).
ExactMatrix rational_rotation();

/// Polynomial sphere maps with n = 2, 3 and degree <= 5: monomial maps,
/// the cyclic-group-invariant maps of degrees 3 and 5, source rotations of
/// some of these, and one map with cross-degree inner products.
std::vector<CorpusEntry> polynomial_corpus();

/// Automorphisms, tensor products of automorphisms, Blaschke products,
/// linear-denominator and general-denominator constructions.
std::vector<CorpusEntry> rational_corpus();

/// Final descendants of both corpora (reduced where needed), skipping
/// denominators with q(0) = 0.
std::vector<CorpusEntry> final_descendant_corpus();

}  // namespace spherelab
