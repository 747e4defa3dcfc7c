#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "spherelab/exact_scalar.hpp"

namespace spherelab {

/// Exact test for a root of q(z) = sum coeffs[j] z^j on |z| = 1.
///
/// Substitutes the Cayley parametrisation z = (t - i)/(t + i) of the circle
/// minus {1}, clears denominators, and counts the real common roots of the
/// real and imaginary parts with a Sturm sequence; z = 1 is checked directly.
bool has_root_on_unit_circle(const std::vector<ExactScalar>& coeffs);

/// Numerical root of q closest to the unit circle (companion matrix
/// eigenvalues); empty for constant q.
std::optional<std::complex<double>> root_nearest_unit_circle(const std::vector<ExactScalar>& coeffs);

}  // namespace spherelab
