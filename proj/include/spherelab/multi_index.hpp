#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace spherelab {

/// Exponent tuple alpha over n variables; indexes the monomial z^alpha.
///
/// Ordering is graded lexicographic: lower degree first, then larger leading
/// exponents first, so that degree-2 indices in two variables run
/// z1^2, z1 z2, z2^2.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);
  MultiIndex(std::initializer_list<int> exponents) : MultiIndex(std::vector<int>(exponents)) {}

  static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0)); }
  static MultiIndex unit(int n, int i);

  int n() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  std::span<const int> exponents() const { return exps_; }

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  /// a - b when every entry stays non-negative.
  bool divisible_by(const MultiIndex& b) const;
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.exps_ == b.exps_; }
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

  /// z^alpha rendered as "z1^2 z2" (or "1").
  std::string to_string() const;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Number of multi-indices of degree exactly d in n variables, binom(d+n-1, n-1).
std::size_t dim_V(int n, int d);

/// All multi-indices of degree d in n variables, in canonical order.
std::vector<MultiIndex> enumerate_degree(int n, int d);

/// Multinomial coefficient d! / (alpha_1! ... alpha_n!).
mpz_class multinomial(const MultiIndex& alpha);

mpz_class binomial(long n, long k);

}  // namespace spherelab
