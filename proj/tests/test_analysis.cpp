#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "spherelab/analysis.hpp"
#include "spherelab/corpus.hpp"
#include "spherelab/reduction.hpp"
#include "test_util.hpp"

using namespace testutil;

namespace {

// closed forms in d, listed alongside the counting formula
mpz_class K1(long d) { return d + 1; }
mpz_class K2(long d) { return mpz_class(d * d * d + 3 * d * d + 4 * d + 2) / 2; }
mpz_class K3(long d) {
  return mpz_class(2 * d * d * d * d * d + 15 * d * d * d * d + 44 * d * d * d + 69 * d * d + 62 * d + 24) / 24;
}

ExplicitMap monomial_map(int n, std::vector<std::pair<MultiIndex, double>> comps) {
  std::vector<FloatPolynomial> fs;
  for (const auto& [a, c] : comps) fs.push_back({{a, c}});
  return explicit_float(n, fs);
}

}  // namespace

TEST(EquationCount, Examples) {
  EXPECT_EQ(equation_count(2, 3), 34);
  EXPECT_EQ(equation_count(3, 2), 45);
  for (int d = 0; d <= 10; ++d) EXPECT_EQ(equation_count(1, d), d + 1);
}

TEST(EquationCount, ClosedForms) {
  for (long d = 0; d <= 10; ++d) {
    EXPECT_EQ(equation_count(1, static_cast<int>(d)), K1(d));
    EXPECT_EQ(equation_count(2, static_cast<int>(d)), K2(d)) << d;
    EXPECT_EQ(equation_count(3, static_cast<int>(d)), K3(d)) << d;
  }
}

TEST(EquationCount, PolynomialDegree) {
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(equation_count_degree_check(n, 12)) << n;
  EXPECT_THROW(equation_count(0, 1), std::invalid_argument);
}

TEST(Quillen, AlreadyPsd) {
  const auto s = quillen_degree(norm_power(2, 2));
  EXPECT_EQ(s.minimal_d, 0);
  EXPECT_FALSE(s.witness.has_value());
}

TEST(Quillen, AlphaSquaredThree) {
  // x^2 - xy + y^2; multiplying by x + y gives x^3 + y^3
  const auto s = quillen_degree(model_family_form(3));
  ASSERT_TRUE(s.minimal_d.has_value());
  EXPECT_EQ(*s.minimal_d, 1);
  ASSERT_TRUE(s.witness.has_value());
  EXPECT_LT(s.witness->value, 0);
}

TEST(Quillen, BruteForceOracle) {
  // for the model family the product coefficients are binomial sums; the
  // minimal d is the first with all of them non-negative
  for (const Rational a : {Rational(1, 2), Rational(1), Rational(2), Rational(3), Rational(7, 2)}) {
    const Rational c = 2 - a;
    int oracle = -1;
    for (int d = 0; d <= 50 && oracle < 0; ++d) {
      bool ok = true;
      for (int k = 0; k <= d + 2; ++k) {
        const Rational v = Rational(binomial(d, k - 2)) + c * Rational(binomial(d, k - 1)) + Rational(binomial(d, k));
        if (v < 0) ok = false;
      }
      if (ok) oracle = d;
    }
    const auto s = quillen_degree(model_family_form(a));
    ASSERT_TRUE(s.minimal_d.has_value());
    EXPECT_EQ(*s.minimal_d, oracle) << a;
    EXPECT_LE(*s.minimal_d, model_family_bound(a)) << a;
  }
}

TEST(Quillen, VanishingOnSphereNeverStabilises) {
  // (|z1|^2 - |z2|^2)^2
  const auto r = form(2, {{mi({2, 0}), mi({2, 0}), "1"}, {mi({1, 1}), mi({1, 1}), "-2"}, {mi({0, 2}), mi({0, 2}), "1"}});
  const auto s = quillen_degree(r, 20);
  EXPECT_FALSE(s.minimal_d.has_value());
  EXPECT_EQ(s.checked_range, 20);
  EXPECT_TRUE(s.witness.has_value());
}

TEST(Quillen, FloatModeAgrees) {
  for (const Rational a : {Rational(1, 2), Rational(3), Rational(7, 2)}) {
    const auto e = quillen_degree(model_family_form(a));
    const auto f = quillen_degree(model_family_form(a), 50, Arithmetic::floating);
    EXPECT_EQ(e.minimal_d, f.minimal_d) << a;
  }
}

TEST(Quillen, Monotone) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    // random Hermitian form of bidegree (2, 2) plus a multiple of ||z||^4
    HermitianForm r = scale(norm_power(2, 2), Rational(3));
    for (int e = 0; e < 3; ++e) {
      const auto idx = enumerate_degree(2, 2);
      const auto& a = idx[rng() % idx.size()];
      const auto& b = idx[rng() % idx.size()];
      r.add(a, b, a == b ? ExactScalar(small_rational(rng)) : small_scalar(rng));
    }
    HermitianForm p = r;
    bool seen = false;
    for (int d = 0; d <= 8; ++d) {
      const bool psd = is_psd(p).psd;
      if (seen) EXPECT_TRUE(psd);
      seen = seen || psd;
      p = shift(p);
    }
  }
}

TEST(Quillen, RejectsMixedBidegree) {
  EXPECT_THROW(quillen_degree(HermitianForm::sphere(2)), std::invalid_argument);
}

TEST(ModelFamily, Bound) {
  EXPECT_EQ(model_family_bound(2), 0);
  EXPECT_EQ(model_family_bound(3), 2);
  EXPECT_EQ(model_family_bound(Rational(7, 2)), 6);
  EXPECT_EQ(model_family_bound(Rational(1, 2)), 0);
  EXPECT_THROW(model_family_bound(4), std::invalid_argument);
}

TEST(DegreeBound, Examples) {
  auto a = degree_bound_check(2, 4, 5);
  EXPECT_EQ(a.bound, 6);
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(a.conjectured, 5);
  EXPECT_TRUE(a.at_conjecture);
  auto b = degree_bound_check(2, 6, 5);
  EXPECT_EQ(b.bound, 15);
  EXPECT_TRUE(b.holds);
  auto c = degree_bound_check(3, 5, 2);
  EXPECT_EQ(c.bound, Rational(10, 3));
  EXPECT_TRUE(c.holds);
  EXPECT_THROW(degree_bound_check(1, 3, 2), std::invalid_argument);
}

TEST(DegreeBound, Corpus) {
  auto maps = polynomial_corpus();
  for (auto& e : rational_corpus()) maps.push_back(std::move(e));
  for (const auto& e : maps) {
    if (e.map.gram.n < 2) continue;
    const auto r = degree_bound_check(e.map.gram.n, static_cast<int>(e.map.gram.rank), e.map.d);
    EXPECT_TRUE(r.holds) << e.name;
  }
}

TEST(DenominatorValid, Examples) {
  const auto q1 = make_denominator(2, {{mi({0, 0}), S("1")}, {mi({1, 0}), S("-1/2")}});
  const auto a = denominator_valid(q1);
  EXPECT_TRUE(a.pass);
  EXPECT_NEAR(a.report.min_abs, 0.5, 1e-6);
  ASSERT_EQ(a.report.bounds.size(), 1u);
  EXPECT_NEAR(a.report.bounds[0].max_abs, 0.5, 1e-4);
  EXPECT_NEAR(a.min_margin, 0.5, 1e-4);

  const auto q2 = make_denominator(2, {{mi({0, 0}), S("1")}, {mi({1, 0}), S("-1")}});
  const auto b = denominator_valid(q2);
  EXPECT_FALSE(b.pass);
  EXPECT_LT(std::abs(1.0 - b.report.witness.at(0)), 1e-4);

  // (1 - z1/2)(1 - z2/2)
  const auto q3 = make_denominator(2, {{mi({0, 0}), S("1")}, {mi({1, 0}), S("-1/2")}, {mi({0, 1}), S("-1/2")},
                                        {mi({1, 1}), S("1/4")}});
  const auto c = denominator_valid(q3);
  EXPECT_TRUE(c.pass);
  ASSERT_EQ(c.report.bounds.size(), 2u);
  // |q2| = |z1 z2|/4 <= 1/8, |q1| <= sqrt 2 / 2
  for (const auto& bd : c.report.bounds) {
    EXPECT_LT(bd.max_abs, bd.bound);
    if (bd.j == 0) EXPECT_LE(bd.max_abs, 0.125 + 1e-9);
    if (bd.j == 1) EXPECT_LE(bd.max_abs, std::sqrt(2.0) / 2 + 1e-9);
  }
}

TEST(Volume, MonomialOnDisk) {
  for (int m = 1; m <= 4; ++m) {
    const auto v = volume_estimate(monomial_map(1, {{mi({m}), 1.0}}), 200000, 17);
    EXPECT_LE(std::abs(v.value - std::numbers::pi * m), 3 * v.standard_error + 1e-9) << m;
    EXPECT_NEAR(v.bound, std::numbers::pi * m, 1e-12);
  }
}

TEST(Volume, IdentityIsExact) {
  // det = 1 everywhere: the estimate is the ball volume with zero variance
  const auto v = volume_estimate(monomial_map(2, {{mi({1, 0}), 1.0}, {mi({0, 1}), 1.0}}), 10000, 1);
  EXPECT_NEAR(v.value, std::numbers::pi * std::numbers::pi / 2, 1e-12);
  EXPECT_LT(v.standard_error, 1e-9);
}

TEST(Volume, TensorSquareAndWhitney) {
  const double r2 = std::sqrt(2.0);
  const auto sq = volume_estimate(monomial_map(2, {{mi({2, 0}), 1.0}, {mi({1, 1}), r2}, {mi({0, 2}), 1.0}}), 200000, 5);
  EXPECT_LE(std::abs(sq.value - 2 * std::numbers::pi * std::numbers::pi), 3 * sq.standard_error);
  const auto w = volume_estimate(monomial_map(2, {{mi({1, 0}), 1.0}, {mi({1, 1}), 1.0}, {mi({0, 2}), 1.0}}), 200000, 5);
  EXPECT_LT(w.value + 3 * w.standard_error, 2 * std::numbers::pi * std::numbers::pi);
}

TEST(Volume, SerialMatchesOmp) {
  const auto f = monomial_map(2, {{mi({1, 0}), 1.0}, {mi({1, 1}), 1.0}, {mi({0, 2}), 1.0}});
  const auto a = volume_estimate(f, 50000, 9, Backend::serial);
  const auto b = volume_estimate(f, 50000, 9, Backend::omp);
  EXPECT_NEAR(a.value, b.value, 1e-9 * std::abs(a.value));
  EXPECT_EQ(volume_estimate(f, 50000, 9).value, b.value);
}

TEST(Volume, RejectsRationalMap) {
  const auto f = explicit_float(1, {{{mi({1}), 1.0}}}, FloatPolynomial{{mi({0}), 1.0}, {mi({1}), 0.5}});
  EXPECT_THROW(volume_estimate(f, 100, 1), std::invalid_argument);
}

TEST(LinearForms, NonnegativeIffPsd) {
  std::mt19937_64 rng(21);
  int psd_count = 0;
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + static_cast<int>(rng() % 2);
    HermitianForm r(n);
    const auto idx = enumerate_degree(n, 1);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      r.add(idx[i], idx[i], ExactScalar(Rational(static_cast<long>(rng() % 7), 2)));
      for (std::size_t j = i + 1; j < idx.size(); ++j) r.add(idx[i], idx[j], small_scalar(rng));
    }
    if (r.is_zero()) continue;
    const bool psd = is_psd(r).psd;
    psd_count += psd;
    EXPECT_EQ(sampled_minimum(r, 10000, 100 + t) >= -1e-12, psd) << t;
  }
  EXPECT_GT(psd_count, 0);
}
