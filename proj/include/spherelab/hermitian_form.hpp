#pragma once

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spherelab/exact_scalar.hpp"
#include "spherelab/multi_index.hpp"

namespace spherelab {

/// Finitely supported Hermitian coefficient tensor c_{alpha beta}, standing
/// for the real-valued function r(z, zbar) = sum c_{alpha beta} z^alpha zbar^beta.
///
/// Both members of every conjugate pair are stored, so c_{beta alpha} =
/// conj(c_{alpha beta}) holds entrywise; zero coefficients are never stored.
/// Values are immutable once built; the mutators below are construction
/// helpers that keep the symmetry intact.
class HermitianForm {
 public:
  using Key = std::pair<MultiIndex, MultiIndex>;
  using Entries = std::map<Key, ExactScalar>;

  explicit HermitianForm(int n);

  int n() const { return n_; }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  ExactScalar coeff(const MultiIndex& alpha, const MultiIndex& beta) const;

  /// Adds c at (alpha, beta) and conj(c) at (beta, alpha). A diagonal
  /// addition must be real.
  void add(const MultiIndex& alpha, const MultiIndex& beta, const ExactScalar& c);
  /// Overwrites the pair (alpha, beta) / (beta, alpha).
  void set(const MultiIndex& alpha, const MultiIndex& beta, const ExactScalar& c);

  /// Largest |alpha| or |beta| over stored entries (-1 for the zero form).
  int max_degree() const;
  /// Distinct indices occurring in any entry, canonical order.
  std::vector<MultiIndex> support() const;
  /// Indices alpha with a nonzero diagonal entry.
  std::vector<MultiIndex> diagonal_support() const;

  static HermitianForm constant(int n, const Rational& c);
  /// ||z||^2
  static HermitianForm norm_squared(int n);
  /// ||z||^2 - 1
  static HermitianForm sphere(int n);

  friend bool operator==(const HermitianForm& a, const HermitianForm& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

  HermitianForm& operator+=(const HermitianForm& o);
  HermitianForm& operator-=(const HermitianForm& o);
  friend HermitianForm operator+(HermitianForm a, const HermitianForm& b) { return a += b; }
  friend HermitianForm operator-(HermitianForm a, const HermitianForm& b) { return a -= b; }
  HermitianForm operator-() const;

  /// Raw accumulation without mirroring; callers must keep symmetry.
  void accumulate_raw(const MultiIndex& alpha, const MultiIndex& beta, const ExactScalar& c);

 private:
  int n_;
  Entries entries_;
};

/// Scaling by a real rational; complex multiples would break symmetry.
HermitianForm scale(const HermitianForm& r, const Rational& c);
/// Same, rejecting a non-real scalar with std::invalid_argument.
HermitianForm scale(const HermitianForm& r, const ExactScalar& c);

/// Coefficientwise conjugation c_{alpha beta} -> conj(c_{alpha beta}),
/// i.e. the function z -> r(conj z).
HermitianForm conjugate(const HermitianForm& r);

/// Entries of bidegree (j, l) together with the mirrored (l, j) block.
HermitianForm bigraded_part(const HermitianForm& r, int j, int l);

/// Coefficient convolution; the coefficient tensor of the pointwise product.
HermitianForm form_multiply(const HermitianForm& r, const HermitianForm& s);

/// Multiplication by ||z||^2.
HermitianForm shift(const HermitianForm& r, int times = 1);

/// ||z||^{2d}: diagonal with multinomial(d; alpha) on |alpha| = d.
HermitianForm norm_power(int n, int d);

/// r(z) = sum c z^alpha conj(z)^beta evaluated in floating point; the
/// imaginary part is rounding only and is dropped.
double eval(const HermitianForm& r, std::span<const std::complex<double>> z);

/// True iff every entry has |alpha| = |beta|, i.e. r(e^{i theta} z) = r(z).
bool circle_invariant(const HermitianForm& r);

/// Outcome of dividing r by the sphere defining function ||z||^2 - 1.
struct SphereDivision {
  std::optional<HermitianForm> quotient;
  /// r - s (||z||^2 - 1) for the recurrence candidate s; zero iff divisible.
  HermitianForm residual;
  /// Bidegrees (j, l) with j >= l carrying a nonzero residual block.
  std::vector<std::pair<int, int>> residual_blocks;
};

/// Solves r = s (||z||^2 - 1) bidegree by bidegree, then certifies the
/// candidate by exact re-multiplication.
SphereDivision divide_by_sphere(const HermitianForm& r);

/// Bidegrees (j, l) with j >= l where r has a nonzero block.
std::vector<std::pair<int, int>> nonzero_blocks(const HermitianForm& r);

}  // namespace spherelab
