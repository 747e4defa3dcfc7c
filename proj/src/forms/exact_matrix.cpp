#include "spherelab/exact_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace spherelab {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ExactScalar(1);
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<ExactScalar>& d) {
  ExactMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conj();
  return out;
}

bool ExactMatrix::is_hermitian() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i).conj())) return false;
  return true;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const ExactScalar& x) { return x.is_zero(); });
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const ExactScalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(ExactMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const ExactScalar inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const ExactScalar f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const ExactMatrix& a) {
  ExactMatrix m = a;
  return echelon(m).size();
}

std::optional<ExactMatrix> inverse(const ExactMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = a.rows();
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = ExactScalar(1);
  }
  auto pivots = echelon(aug);
  if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
  ExactMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

ExactMatrix form_matrix(const HermitianForm& r, const std::vector<MultiIndex>& idx) {
  ExactMatrix m(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = r.coeff(idx[i], idx[j]);
  return m;
}

HermitianForm matrix_form(int n, const std::vector<MultiIndex>& idx, const ExactMatrix& m) {
  if (!m.is_hermitian()) throw std::invalid_argument("matrix_form needs a Hermitian matrix");
  HermitianForm r(n);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) r.accumulate_raw(idx[i], idx[j], m(i, j));
  return r;
}

namespace {

std::vector<ExactScalar> back_substitute(const std::vector<LdlDecomposition::Step>& steps, std::size_t last,
                                         std::vector<ExactScalar> y) {
  for (std::size_t s = last; s-- > 0;) {
    const auto& st = steps[s];
    for (std::size_t p = 0; p < st.pivots.size(); ++p) {
      ExactScalar v;
      for (std::size_t r = 0; r < st.rest.size(); ++r)
        if (!st.multiplier(p, r).is_zero()) v += st.multiplier(p, r) * y[st.rest[r]];
      y[st.pivots[p]] = -v;
    }
  }
  return y;
}

}  // namespace

LdlDecomposition ldl_hermitian(const ExactMatrix& a, bool stop_at_negative) {
  if (!a.is_hermitian()) throw std::invalid_argument("ldl_hermitian needs a Hermitian matrix");
  const std::size_t n = a.rows();
  ExactMatrix s = a;  // Schur complement, addressed by original indices
  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;

  LdlDecomposition out;
  while (!live.empty()) {
    // largest-modulus diagonal
    std::optional<std::size_t> best;
    for (std::size_t i : live) {
      const Rational& d = s(i, i).re();
      if (sgn(d) == 0) continue;
      if (!best || abs(d) > abs(s(*best, *best).re())) best = i;
    }
    std::vector<std::size_t> piv;
    if (best) {
      piv = {*best};
    } else {
      for (std::size_t i : live) {
        for (std::size_t j : live)
          if (i != j && !s(i, j).is_zero()) {
            piv = {i, j};
            break;
          }
        if (!piv.empty()) break;
      }
      if (piv.empty()) {
        out.inertia.zero += live.size();
        break;
      }
    }

    LdlDecomposition::Step st;
    st.pivots = piv;
    for (std::size_t i : live)
      if (std::find(piv.begin(), piv.end(), i) == piv.end()) st.rest.push_back(i);
    const std::size_t k = piv.size();
    st.block = ExactMatrix(k, k);
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = 0; q < k; ++q) st.block(p, q) = s(piv[p], piv[q]);
    const ExactMatrix block_inv = *inverse(st.block);
    ExactMatrix upper(k, st.rest.size());
    st.column = ExactMatrix(st.rest.size(), k);
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t r = 0; r < st.rest.size(); ++r) {
        upper(p, r) = s(piv[p], st.rest[r]);
        st.column(r, p) = s(st.rest[r], piv[p]);
      }
    st.multiplier = block_inv * upper;

    bool negative = false;
    std::vector<ExactScalar> local(n);
    if (k == 1) {
      if (sgn(st.block(0, 0).re()) > 0) {
        ++out.inertia.positive;
      } else {
        ++out.inertia.negative;
        negative = true;
        local[piv[0]] = ExactScalar(1);
      }
    } else {
      ++out.inertia.positive;
      ++out.inertia.negative;
      negative = true;
      local[piv[0]] = ExactScalar(1);
      local[piv[1]] = -st.block(0, 1).conj();
    }

    // Schur update on the remaining indices
    for (std::size_t r1 = 0; r1 < st.rest.size(); ++r1)
      for (std::size_t r2 = 0; r2 < st.rest.size(); ++r2) {
        ExactScalar corr;
        for (std::size_t p = 0; p < k; ++p)
          if (!st.column(r1, p).is_zero() && !st.multiplier(p, r2).is_zero())
            corr += st.column(r1, p) * st.multiplier(p, r2);
        if (!corr.is_zero()) s(st.rest[r1], st.rest[r2]) -= corr;
      }

    out.steps.push_back(std::move(st));
    if (negative && !out.negative_direction) {
      out.negative_step = out.steps.size() - 1;
      // the negative block itself was just eliminated; back-substitute through earlier steps
      out.negative_direction = back_substitute(out.steps, out.steps.size() - 1, std::move(local));
      if (stop_at_negative) break;
    }
    live = out.steps.back().rest;
  }
  return out;
}

}  // namespace spherelab
