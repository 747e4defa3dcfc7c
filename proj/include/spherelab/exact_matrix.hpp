#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spherelab/exact_scalar.hpp"
#include "spherelab/hermitian_form.hpp"

namespace spherelab {

/// Dense row-major matrix over Gaussian rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(const std::vector<ExactScalar>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  ExactScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const ExactScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ExactMatrix adjoint() const;
  bool is_hermitian() const;
  bool is_zero() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExactScalar> data_;
};

std::size_t rank(const ExactMatrix& a);
/// Gauss-Jordan inverse; std::nullopt when singular.
std::optional<ExactMatrix> inverse(const ExactMatrix& a);

/// Matrix of r on an index list: M(i, j) = c_{idx[i] idx[j]}.
ExactMatrix form_matrix(const HermitianForm& r, const std::vector<MultiIndex>& idx);
/// Inverse of form_matrix for a Hermitian M.
HermitianForm matrix_form(int n, const std::vector<MultiIndex>& idx, const ExactMatrix& m);

struct SignatureTriple {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const SignatureTriple&, const SignatureTriple&) = default;
};

/// Symmetric-pivoted LDL* of a Hermitian matrix over Gaussian rationals.
///
/// Pivots are the largest-modulus diagonal of the current Schur complement;
/// when the whole diagonal vanishes but an off-diagonal entry does not, a
/// 2x2 block [[0, c], [conj c, 0]] (one positive, one negative direction) is
/// eliminated instead.
struct LdlDecomposition {
  struct Step {
    std::vector<std::size_t> pivots;  // 1 or 2 original indices
    ExactMatrix block;                // Schur complement on the pivots
    std::vector<std::size_t> rest;    // indices still live after this step
    ExactMatrix multiplier;           // block^{-1} * S[pivots, rest]
    ExactMatrix column;               // S[rest, pivots]
  };
  std::vector<Step> steps;
  SignatureTriple inertia;
  /// Vector v with v* A v < 0, from the first negative pivot, if any.
  std::optional<std::vector<ExactScalar>> negative_direction;
  /// Index of the first step yielding a negative direction.
  std::optional<std::size_t> negative_step;
};

/// When stop_at_negative is set the factorisation halts at the first
/// negative direction (inertia then only counts the steps taken).
LdlDecomposition ldl_hermitian(const ExactMatrix& a, bool stop_at_negative = false);

}  // namespace spherelab
