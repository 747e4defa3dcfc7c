#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numbers>

#include "spherelab/exact_matrix.hpp"
#include "spherelab/inertia.hpp"
#include "spherelab/unit_circle.hpp"
#include "test_util.hpp"

using namespace spherelab;
using namespace testutil;

namespace {

HermitianForm quintic_gram() {
  return form(2, {{mi({5, 0}), mi({5, 0}), "1"},
                  {mi({3, 1}), mi({3, 1}), "5"},
                  {mi({1, 2}), mi({1, 2}), "5"},
                  {mi({0, 5}), mi({0, 5}), "1"}});
}

// (|z1|^2 - |z2|^2)^2
HermitianForm split_square() {
  return form(2, {{mi({2, 0}), mi({2, 0}), "1"}, {mi({1, 1}), mi({1, 1}), "-2"}, {mi({0, 2}), mi({0, 2}), "1"}});
}

}  // namespace

TEST(Scalars, ParseAndCanonicalise) {
  EXPECT_EQ(to_string(R("6/4")), "3/2");
  EXPECT_EQ(to_string(R("-3/6")), "-1/2");
  EXPECT_THROW(R("-3/-6"), std::invalid_argument);
  EXPECT_THROW(R("0.5"), std::invalid_argument);
  EXPECT_THROW(R("1/0"), std::invalid_argument);
  EXPECT_EQ(S("1/2-3/4i"), ExactScalar(R("1/2"), R("-3/4")));
  EXPECT_EQ(S("i"), ExactScalar(0, 1));
  EXPECT_EQ(S("-2i"), ExactScalar(0, -2));
  const ExactScalar x = S("3/5+4/5i");
  EXPECT_EQ(x * x.inverse(), ExactScalar(1));
  EXPECT_EQ(x.norm(), Rational(1));
  EXPECT_THROW(ExactScalar().inverse(), std::domain_error);
  EXPECT_EQ(rational_sqrt(R("9/16")), R("3/4"));
  EXPECT_FALSE(rational_sqrt(R("5")).has_value());
}

TEST(MultiIndices, DimensionExamples) {
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(dim_V(n, 0), 1u);
  EXPECT_EQ(dim_V(2, 5), 6u);
  EXPECT_EQ(dim_V(3, 2), 6u);
  // enumeration oracle: brute-force exponent tuples
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 5; ++d) {
      std::size_t count = 0;
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
          ++count;
          return;
        }
        for (int k = 0; k <= left; ++k) rec(i + 1, left - k);
      };
      rec(0, d);
      EXPECT_EQ(dim_V(n, d), count);
      EXPECT_EQ(enumerate_degree(n, d).size(), count);
    }
}

TEST(MultiIndices, GradedLexOrder) {
  const auto idx = enumerate_degree(2, 2);
  ASSERT_EQ(idx.size(), 3u);
  EXPECT_EQ(idx[0], mi({2, 0}));
  EXPECT_EQ(idx[1], mi({1, 1}));
  EXPECT_EQ(idx[2], mi({0, 2}));
  EXPECT_LT(mi({0, 1}), mi({2, 0}));
  EXPECT_TRUE(std::is_sorted(idx.begin(), idx.end()));
  EXPECT_EQ(mi({2, 1}).to_string(), "z1^2 z2");
}

TEST(FormArithmetic, Examples) {
  const int n = 2;
  const auto rho = HermitianForm::norm_squared(n) + HermitianForm::constant(n, -1);
  EXPECT_EQ(rho, HermitianForm::sphere(n));
  const auto scaled = scale(rho, R("3/4"));
  EXPECT_EQ(scaled.coeff(mi({0, 0}), mi({0, 0})), S("-3/4"));
  EXPECT_EQ(scaled.coeff(mi({1, 0}), mi({1, 0})), S("3/4"));
  EXPECT_EQ(bigraded_part(rho, 1, 1), HermitianForm::norm_squared(n));
  EXPECT_THROW(scale(rho, S("i")), std::invalid_argument);
  EXPECT_NO_THROW(scale(rho, S("2")));
  HermitianForm r(1);
  EXPECT_THROW(r.add(mi({1}), mi({1}), S("i")), std::invalid_argument);
}

TEST(FormArithmetic, ConjugateAndBigradedHermitian) {
  const auto r = form(2, {{mi({1, 0}), mi({0, 2}), "1+2i"}, {mi({1, 1}), mi({0, 0}), "3"}});
  EXPECT_TRUE(hermitian_symmetric(r));
  const auto c = conjugate(r);
  EXPECT_TRUE(hermitian_symmetric(c));
  EXPECT_EQ(c.coeff(mi({1, 0}), mi({0, 2})), S("1-2i"));
  const auto b = bigraded_part(r, 1, 2);
  EXPECT_TRUE(hermitian_symmetric(b));
  EXPECT_EQ(b.entries().size(), 2u);
  EXPECT_EQ(bigraded_part(r, 2, 1), b);
}

TEST(FormMultiply, Examples) {
  const auto z2 = HermitianForm::norm_squared(2);
  const auto z4 = form_multiply(z2, z2);
  EXPECT_EQ(z4.coeff(mi({2, 0}), mi({2, 0})), S("1"));
  EXPECT_EQ(z4.coeff(mi({1, 1}), mi({1, 1})), S("2"));
  EXPECT_EQ(z4.coeff(mi({0, 2}), mi({0, 2})), S("1"));
  EXPECT_EQ(z4.entries().size(), 3u);

  const auto rho = HermitianForm::sphere(1);
  const auto expect = form(1, {{mi({2}), mi({2}), "1"}, {mi({1}), mi({1}), "-2"}, {mi({0}), mi({0}), "1"}});
  EXPECT_EQ(form_multiply(rho, rho), expect);

  // W_a W_b with a = 1/2, b = 1/3: |(1 - z/2)(1 - z/3)|^2 = |1 - 5z/6 + z^2/6|^2
  const ExactPolynomial wa{{mi({0}), S("1")}, {mi({1}), S("-1/2")}};
  const ExactPolynomial wb{{mi({0}), S("1")}, {mi({1}), S("-1/3")}};
  const auto prod = form_multiply(squared_modulus(1, wa), squared_modulus(1, wb));
  const std::vector<ExactScalar> u{S("1"), S("-5/6"), S("1/6")};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      EXPECT_EQ(prod.coeff(mi({i}), mi({j})), u[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(j)].conj());
}

TEST(NormPower, Examples) {
  const std::vector<long> b{1, 5, 10, 10, 5, 1};
  const auto p = norm_power(2, 5);
  const auto idx = enumerate_degree(2, 5);
  for (std::size_t i = 0; i < idx.size(); ++i) EXPECT_EQ(p.coeff(idx[i], idx[i]), ExactScalar(b[i]));
  EXPECT_EQ(p.entries().size(), 6u);
  for (int d = 0; d <= 6; ++d) {
    const auto q = norm_power(1, d);
    EXPECT_EQ(q.entries().size(), 1u);
    EXPECT_EQ(q.coeff(mi({d}), mi({d})), S("1"));
  }
  const auto t = norm_power(3, 2);
  EXPECT_EQ(t.coeff(mi({2, 0, 0}), mi({2, 0, 0})), S("1"));
  EXPECT_EQ(t.coeff(mi({1, 0, 1}), mi({1, 0, 1})), S("2"));
  // equals repeated multiplication by ||z||^2
  for (int n = 1; n <= 3; ++n) {
    HermitianForm acc = HermitianForm::constant(n, 1);
    for (int d = 0; d <= 4; ++d) {
      EXPECT_EQ(norm_power(n, d), acc);
      acc = form_multiply(acc, HermitianForm::norm_squared(n));
    }
  }
}

TEST(DivideBySphere, Examples) {
  auto d1 = divide_by_sphere(HermitianForm::sphere(2));
  ASSERT_TRUE(d1.quotient);
  EXPECT_EQ(*d1.quotient, HermitianForm::constant(2, 1));

  const auto z4m1 = norm_power(2, 2) - HermitianForm::constant(2, 1);
  auto d2 = divide_by_sphere(z4m1);
  ASSERT_TRUE(d2.quotient);
  EXPECT_EQ(*d2.quotient, HermitianForm::norm_squared(2) + HermitianForm::constant(2, 1));

  const auto H = quintic_gram() - HermitianForm::constant(2, 1);
  auto d3 = divide_by_sphere(H);
  ASSERT_TRUE(d3.quotient);
  EXPECT_EQ(form_multiply(*d3.quotient, HermitianForm::sphere(2)), H);
  EXPECT_TRUE(d3.residual.is_zero());

  auto d4 = divide_by_sphere(HermitianForm::norm_squared(2));
  EXPECT_FALSE(d4.quotient);
  EXPECT_FALSE(d4.residual.is_zero());
  // the recurrence has nothing below the top block to absorb it
  EXPECT_EQ(d4.residual, HermitianForm::norm_squared(2));
  ASSERT_EQ(d4.residual_blocks.size(), 1u);
  EXPECT_EQ(d4.residual_blocks[0], std::make_pair(1, 1));
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature(split_square()), (SignatureTriple{2, 1, 0}));
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) EXPECT_EQ(signature(norm_power(n, m)), (SignatureTriple{dim_V(n, m), 0, 0}));
  EXPECT_EQ(signature(HermitianForm::sphere(1)), (SignatureTriple{1, 1, 0}));
  // zero diagonal, nonzero off-diagonal: indefinite through a 2x2 pivot
  const auto hyper = form(1, {{mi({1}), mi({0}), "1"}});
  EXPECT_EQ(signature(hyper), (SignatureTriple{1, 1, 0}));
  const auto fs = signature_float(split_square());
  ASSERT_TRUE(fs.triple);
  EXPECT_EQ(*fs.triple, (SignatureTriple{2, 1, 0}));
  std::vector<double> ev = fs.eigenvalues;
  std::sort(ev.begin(), ev.end());
  EXPECT_NEAR(ev[0], -2.0, 1e-12);
  EXPECT_NEAR(ev[1], 1.0, 1e-12);
  EXPECT_NEAR(ev[2], 1.0, 1e-12);
}

TEST(Signature, FloatIndeterminate) {
  // rank-deficient Gram matrix: one zero eigenvalue
  const auto r = form(1, {{mi({0}), mi({0}), "1"}, {mi({1}), mi({1}), "1"}, {mi({0}), mi({1}), "1"}});
  EXPECT_EQ(signature(r), (SignatureTriple{1, 0, 1}));
  EXPECT_FALSE(signature_float(r).triple.has_value());
}

TEST(IsPsd, Examples) {
  EXPECT_TRUE(is_psd(norm_power(2, 3)));
  auto chk = is_psd(split_square());
  EXPECT_FALSE(chk);
  ASSERT_TRUE(chk.witness);
  ASSERT_EQ(chk.witness->coords.size(), 1u);
  EXPECT_EQ(chk.witness->coords[0].first, mi({1, 1}));
  EXPECT_LT(sgn(chk.witness->value), 0);

  // excess form for n = m = 1, a = 3/5, M = [1/4]:
  // |z|^4 (1 - |M|^2) + |a|^2 |z|^4 (1 - 1/|M|^2)
  const Rational lam2 = R("1/16"), a2 = R("9/25");
  const Rational coeff = (1 - lam2) + a2 * (1 - 1 / lam2);
  HermitianForm excess(1);
  excess.add(mi({2}), mi({2}), ExactScalar(coeff));
  EXPECT_FALSE(is_psd(excess));
}

TEST(IsPsd, WitnessIsNegativeDirection) {
  std::mt19937_64 rng(11);
  int indefinite = 0;
  for (int t = 0; t < 200; ++t) {
    const auto r = random_form(rng, 2, 2, 8);
    const auto chk = is_psd(r);
    EXPECT_EQ(chk.psd, signature(r).negative == 0);
    if (!chk.psd) {
      ++indefinite;
      ExactScalar acc;
      for (const auto& [a, va] : chk.witness->coords)
        for (const auto& [b, vb] : chk.witness->coords) acc += va.conj() * r.coeff(a, b) * vb;
      EXPECT_LT(sgn(acc.re()), 0);
      EXPECT_TRUE(acc.is_real());
    }
  }
  EXPECT_GT(indefinite, 50);
}

TEST(PsdFactor, Examples) {
  const auto comps = psd_factor(norm_power(2, 2));
  std::vector<Rational> w;
  for (const auto& c : comps) {
    EXPECT_EQ(c.poly.size(), 1u);
    w.push_back(c.weight);
  }
  std::sort(w.begin(), w.end());
  EXPECT_EQ(w, (std::vector<Rational>{1, 1, 2}));

  const auto k = psd_factor(HermitianForm::constant(1, R("9/16")));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0].weight, R("9/16"));

  HermitianForm h(1);
  h.add(mi({2}), mi({2}), S("63/400"));
  const auto f = psd_factor(h);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].weight, R("63/400"));
  EXPECT_EQ(f[0].poly.begin()->first, mi({2}));

  EXPECT_THROW(psd_factor(split_square()), std::domain_error);
}

TEST(CircleInvariant, Examples) {
  EXPECT_TRUE(circle_invariant(norm_power(2, 3) - HermitianForm::constant(2, 1)));
  // c_{1,0} = conj(c_{0,1}) = 1 on n = 1: z + conj(z)
  EXPECT_FALSE(circle_invariant(form(1, {{mi({1}), mi({0}), "1"}})));
  // the same pair read as n = 2 indices is bidegree (1, 1), hence invariant
  EXPECT_TRUE(circle_invariant(form(2, {{mi({1, 0}), mi({0, 1}), "1"}})));
  EXPECT_FALSE(circle_invariant(form(1, {{mi({2}), mi({1}), "3/5"}})));
}

TEST(Eval, Examples) {
  const std::vector<std::complex<double>> e1{{0.6, 0.0}, {0.0, 0.8}};
  EXPECT_NEAR(eval(HermitianForm::sphere(2), e1), 0.0, 1e-15);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(eval(split_square(), std::vector<std::complex<double>>{{h, 0}, {h, 0}}), 0.0, 1e-15);
  const auto H = quintic_gram() - HermitianForm::constant(2, 1);
  EXPECT_NEAR(eval(H, std::vector<std::complex<double>>{{1, 0}, {0, 0}}), 0.0, 1e-15);
  const CompiledForm ch(H);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto z = random_point(rng, 2);
    EXPECT_NEAR(ch(z), eval(H, z), 1e-9 * std::max(1.0, std::abs(eval(H, z))));
  }
}

// -------- properties --------

TEST(FormProperties, SymmetryAfterEveryOperation) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + t % 3;
    const auto r = random_form(rng, n, 2);
    const auto s = random_form(rng, n, 2);
    for (const auto& x : {r + s, r - s, -r, scale(r, R("3/7")), conjugate(r), bigraded_part(r, 2, 1),
                          form_multiply(r, s), shift(r, 2)})
      EXPECT_TRUE(hermitian_symmetric(x));
  }
}

TEST(FormProperties, MultiplyAgreesWithPointwiseProduct) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 10; ++t) {
    const int n = 1 + t % 3;
    const auto r = random_form(rng, n, 2);
    const auto s = random_form(rng, n, 2);
    const auto rs = form_multiply(r, s);
    for (int k = 0; k < 100; ++k) {
      const auto z = random_point(rng, n, 0.7);
      EXPECT_NEAR(eval(rs, z), eval(r, z) * eval(s, z), 1e-9);
    }
  }
}

TEST(FormProperties, DivisionRoundTrip) {
  std::mt19937_64 rng(3);
  int divisible = 0;
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + t % 3;
    // half the cases are multiples of the sphere function by construction
    HermitianForm r = random_form(rng, n, 2);
    if (t % 2 == 0) r = form_multiply(r, HermitianForm::sphere(n));
    const auto d = divide_by_sphere(r);
    if (d.quotient) {
      ++divisible;
      EXPECT_EQ(form_multiply(*d.quotient, HermitianForm::sphere(n)), r);
    } else {
      EXPECT_FALSE(d.residual.is_zero());
    }
    if (t % 2 == 0) EXPECT_TRUE(d.quotient.has_value());
  }
  EXPECT_GE(divisible, 30);
}

TEST(FormProperties, SignatureScaleAndNegation) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const auto r = random_form(rng, 2, 2, 7);
    const auto s = signature(r);
    EXPECT_EQ(signature(scale(r, R("5/3"))), s);
    const auto neg = signature(-r);
    EXPECT_EQ(neg.positive, s.negative);
    EXPECT_EQ(neg.negative, s.positive);
    EXPECT_EQ(s.positive + s.negative + s.zero, r.support().size());
    // congruence invariance: the float path counts the same
    const auto fs = signature_float(r);
    if (fs.triple) EXPECT_EQ(*fs.triple, s);
  }
}

TEST(FormProperties, PsdFactorRoundTrip) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + t % 2;
    // PSD by construction: sum of three squared moduli
    HermitianForm r(n);
    for (int k = 0; k < 3; ++k) r += squared_modulus(n, random_poly(rng, n, 2));
    const auto comps = psd_factor(r);
    EXPECT_EQ(expand_components(n, comps), r);
    EXPECT_EQ(comps.size(), signature(r).positive);
    const auto fl = psd_factor_float(r);
    EXPECT_EQ(fl.size(), signature(r).positive);
    const auto back = expand_float(fl);
    for (const auto& [key, v] : r.entries()) {
      auto it = back.find(key);
      ASSERT_NE(it, back.end());
      EXPECT_NEAR(std::abs(it->second - v.to_complex()), 0.0, 1e-8);
    }
  }
}

TEST(FormProperties, CircleInvarianceBySampling) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + t % 2;
    HermitianForm r = random_form(rng, n, 2);
    if (t % 2 == 0) {
      HermitianForm diag(n);
      for (int j = 0; j <= 2; ++j) diag += bigraded_part(r, j, j);
      r = diag;
    }
    bool blocks_zero = true;
    for (const auto& [j, l] : nonzero_blocks(r)) blocks_zero = blocks_zero && j == l;
    EXPECT_EQ(circle_invariant(r), blocks_zero);
    bool sampled = true;
    for (int s = 0; s < 5; ++s) {
      const auto z = random_point(rng, n, 0.8);
      for (int k = 0; k < 16; ++k) {
        const auto w = std::polar(1.0, 2 * std::numbers::pi * k / 16.0 + 0.1);
        auto zt = z;
        for (auto& c : zt) c *= w;
        sampled = sampled && std::abs(eval(r, zt) - eval(r, z)) < 1e-9;
      }
    }
    EXPECT_EQ(circle_invariant(r), sampled);
  }
}

TEST(FormProperties, PsdMonotoneUnderShift) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + t % 2;
    HermitianForm r(n);
    for (int k = 0; k < 2; ++k) r += squared_modulus(n, random_poly(rng, n, 2));
    if (t % 3 == 0) r = r + form(n, {{MultiIndex::zero(n), MultiIndex::zero(n), "-1/8"}});
    if (is_psd(r)) EXPECT_TRUE(is_psd(form_multiply(norm_power(n, 1), r)));
  }
}

TEST(UnitCircleRoots, Exact) {
  // 1 - z/2: root 2
  EXPECT_FALSE(has_root_on_unit_circle({S("1"), S("-1/2")}));
  // 1 - z: root 1
  EXPECT_TRUE(has_root_on_unit_circle({S("1"), S("-1")}));
  // z - i
  EXPECT_TRUE(has_root_on_unit_circle({S("-i"), S("1")}));
  // z^2 + 1
  EXPECT_TRUE(has_root_on_unit_circle({S("1"), S("0"), S("1")}));
  // (z - (3/5 + 4/5 i))(z - 2)
  const ExactScalar r1 = S("3/5+4/5i"), r2 = S("2");
  EXPECT_TRUE(has_root_on_unit_circle({r1 * r2, -(r1 + r2), S("1")}));
  // (z - 1/2)(z - 3)
  EXPECT_FALSE(has_root_on_unit_circle({S("3/2"), S("-7/2"), S("1")}));
  // z^3 (root 0 only)
  EXPECT_FALSE(has_root_on_unit_circle({S("0"), S("0"), S("0"), S("1")}));
  // double root at -1: (z + 1)^2
  EXPECT_TRUE(has_root_on_unit_circle({S("1"), S("2"), S("1")}));
  EXPECT_FALSE(has_root_on_unit_circle({S("5")}));

  const auto r = root_nearest_unit_circle({S("-i"), S("1")});
  ASSERT_TRUE(r);
  EXPECT_NEAR(std::abs(*r - std::complex<double>(0, 1)), 0.0, 1e-12);
}

TEST(UnitCircleRoots, AgreesWithNumericRoots) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    std::vector<ExactScalar> c;
    for (int k = 0; k <= 3; ++k) c.push_back(small_scalar(rng));
    if (c.back().is_zero()) c.back() = ExactScalar(1);
    const auto r = root_nearest_unit_circle(c);
    ASSERT_TRUE(r);
    const double gap = std::abs(std::abs(*r) - 1.0);
    if (gap > 1e-6) EXPECT_FALSE(has_root_on_unit_circle(c));
    if (has_root_on_unit_circle(c)) EXPECT_LT(gap, 1e-6);
  }
}
