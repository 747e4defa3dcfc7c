#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "spherelab/explicit_map.hpp"
#include "spherelab/hermitian_form.hpp"
#include "spherelab/inertia.hpp"
#include "spherelab/sphere_map.hpp"

namespace spherelab {

/// K(n, d) = D(n,d) sum_{j<d} D(n,j) + D(n,d)(D(n,d)+1)/2, the number of
/// inner-product equations for a degree-d polynomial sphere map.
mpz_class equation_count(int n, int d);

/// For fixed n, checks over d = 0..d_max that K(n, .) behaves as a polynomial
/// of degree exactly 2n - 1: the (2n-1)-th differences are a nonzero
/// constant and the 2n-th vanish. Needs d_max >= 2n.
bool equation_count_degree_check(int n, int d_max);

enum class Arithmetic { exact, floating };

struct StabilizationResult {
  std::optional<int> minimal_d;
  int checked_range = 0;  // largest d examined
  /// Negative direction at minimal_d - 1, or at checked_range when none.
  std::optional<NegativeDirection> witness;
  /// PSD outcome for d = 0..checked_range (stops at the first success).
  std::vector<bool> trajectory;
};

/// Least d <= d_max with ||z||^{2d} r positive semidefinite. Rejects r that
/// is not of a single bidegree (m, m) (std::invalid_argument). In floating
/// mode the eigenvalue inertia decides, and an indeterminate inertia counts
/// as not PSD; the witness is then left empty.
StabilizationResult quillen_degree(const HermitianForm& r, int d_max = 50, Arithmetic mode = Arithmetic::exact);

/// ||z||^4 - alpha_sq |z|^2 |w|^2 in two variables.
HermitianForm model_family_form(const Rational& alpha_sq);

/// max(0, ceil((2 alpha_sq - 4) / (4 - alpha_sq))); rejects alpha_sq
/// outside [0, 4).
int model_family_bound(const Rational& alpha_sq);

struct DegreeBoundReport {
  int n = 0;
  int N = 0;
  int d = 0;
  Rational bound;  // N(N-1) / (2(2n-3))
  bool holds = false;
  /// 2N - 3 for n = 2, (N - 1)/(n - 1) for n >= 3; informational only.
  Rational conjectured;
  bool within_conjecture = false;
  bool at_conjecture = false;
};

/// Rejects n = 1 (std::invalid_argument).
DegreeBoundReport degree_bound_check(int n, int N, int d);

struct DenominatorValidity {
  DenominatorReport report;
  bool pass = false;
  /// min over j of binom(k, j) - max |q_{k-j}|; +inf without bounds.
  double min_margin = 0.0;
};

/// Sampled sphere test; a pass is evidence, a fail comes with a witness.
DenominatorValidity denominator_valid(const Denominator& q, const SamplingOptions& opt = {});

enum class Backend { serial, omp };

struct VolumeEstimate {
  double value = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double bound = 0.0;  // pi^n m^n / n!
  double gap = 0.0;    // bound - value
};

/// Monte Carlo estimate of the integral of det(Dp* Dp) over the unit ball.
/// Rejects non-polynomial maps (std::invalid_argument).
VolumeEstimate volume_estimate(const ExplicitMap& f, std::uint64_t samples = 1000000, std::uint64_t seed = 20240601,
                               Backend backend = Backend::omp);

/// Smallest value of r over sphere samples.
double sampled_minimum(const HermitianForm& r, std::uint64_t samples = 10000, std::uint64_t seed = 20240601);

}  // namespace spherelab
