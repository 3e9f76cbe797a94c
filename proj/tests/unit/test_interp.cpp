#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "ultraweights/errors.hpp"
#include "ultraweights/interp.hpp"

using namespace ultraweights;

constexpr double pi = std::numbers::pi;

TEST(Favard, KnownValues) {
  EXPECT_NEAR(favard(0), 1.0, 1e-13);
  EXPECT_NEAR(favard(1), pi / 2, 1e-13);
  EXPECT_NEAR(favard(2), pi * pi / 8, 1e-13);
  EXPECT_NEAR(favard(3), std::pow(pi, 3) / 24, 1e-13);
  EXPECT_NEAR(favard(4), 5 * std::pow(pi, 4) / 384, 1e-13);
  // odd members climb to 4/pi, even ones fall to 4/pi
  EXPECT_NEAR(favard(60), 4 / pi, 1e-12);
  EXPECT_THROW(favard(-1), InputError);
}

TEST(Kolmogorov, Values) {
  EXPECT_NEAR(kolmogorov_constant(2, 1), std::sqrt(2.0), 1e-13);
  // K_{3,1} = k_2 / k_3^{2/3}
  EXPECT_NEAR(kolmogorov_constant(3, 1), (pi * pi / 8) / std::pow(std::pow(pi, 3) / 24, 2.0 / 3.0), 1e-13);
  EXPECT_THROW(kolmogorov_constant(3, 3), InputError);
}

TEST(Bounds, Arithmetic) {
  const NormTriple t{1.0, 16.0, 4, kInfNorm};
  EXPECT_NEAR(lk_bound(t, 2).value, 8.0, 1e-12);
  EXPECT_EQ(lk_bound(t, 2).formula_id, "lk");

  Geometry g;
  EXPECT_NEAR(taylor_bound(g, {1.0, 2.0, 2, kInfNorm}, 1).value, 200.0, 1e-9);
  EXPECT_NEAR(mixed_bound(g, {1.0, 4.0, 2, kInfNorm}, 1).value, 400.0, 1e-9);

  // 4 e^{2j} (m/j)^j ||f||^{1-j/m} max(||f^(m)||, m!/|I|^m ||f||)^{j/m}
  const auto cg = cartan_gorny_bound(2.0, {1.0, 2.0, 2, kInfNorm}, 1);
  EXPECT_NEAR(cg.value, 8.0 * std::exp(2.0) * std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(cartan_gorny_bound(2.0, {1.0, 1.0, 2, kInfNorm}, 1).value, 8.0 * std::exp(2.0), 1e-9);
}

TEST(Bounds, ZeroNorms) {
  EXPECT_EQ(lk_bound({0.0, 1.0, 3, kInfNorm}, 1).value, 0.0);
  EXPECT_THROW(lk_bound({-1.0, 1.0, 3, kInfNorm}, 1), InputError);
  EXPECT_THROW(lk_bound({1.0, 1.0, 3, kInfNorm}, 3), InputError);
}

TEST(Polarization, Expansion) {
  const int a[] = {1, 1};
  const auto terms = polarization_expand(a);
  ASSERT_EQ(terms.size(), 3u);
  double sum_pair = 0.0, sum_single = 0.0;
  for (const auto& t : terms) {
    if (t.weight == 2) {
      sum_pair += t.coefficient;
      EXPECT_DOUBLE_EQ(t.direction[0], 0.5);
      EXPECT_DOUBLE_EQ(t.direction[1], 0.5);
    } else {
      sum_single += t.coefficient;
    }
  }
  EXPECT_DOUBLE_EQ(sum_pair, 2.0);
  EXPECT_DOUBLE_EQ(sum_single, -1.0);
  const int zero[] = {0, 0};
  EXPECT_THROW(polarization_expand(zero), InputError);
  const int big[] = {11, 10};
  EXPECT_THROW(polarization_expand(big), InputError);
}

TEST(Polarization, Reconstruct) {
  FunctionSpec p;
  p.kind = FunctionSpec::Kind::poly;
  p.dimension = 3;
  p.coeffs[{2, 1, 3}] = 1.5;
  p.coeffs[{0, 2, 1}] = -1.0;
  const auto f = make_function(p);
  const double x[] = {0.4, -0.8, 0.6};
  for (auto alpha : {std::vector<int>{2, 1, 3}, std::vector<int>{1, 1, 1}, std::vector<int>{0, 2, 1}})
    EXPECT_NEAR(polarization_reconstruct(f, alpha, x), f.partial(alpha, x), 1e-9);
}

TEST(Verify, SineLandauKolmogorov) {
  FunctionSpec s;
  s.kind = FunctionSpec::Kind::sin;
  VerifyParams p;
  p.j = 1, p.m = 2;
  const auto r = verify_on_function(make_function(s), InequalityKind::lk, p);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.lhs, 1.0, 1e-9);
  EXPECT_NEAR(r.margin, 2.0, 1e-8);
}

TEST(Verify, SkipsInfiniteRightHandSide) {
  FunctionSpec s;
  s.kind = FunctionSpec::Kind::sin;
  VerifyParams p;
  p.p = 2.0;
  const auto r = verify_on_function(make_function(s), InequalityKind::lk, p);
  EXPECT_TRUE(r.skipped);
  FunctionSpec m;
  m.kind = FunctionSpec::Kind::monomial;
  m.m = 4;
  EXPECT_TRUE(verify_on_function(make_function(m), InequalityKind::lk, VerifyParams{}).skipped);
}

TEST(Verify, CartanGornyOnInterval) {
  FunctionSpec m;
  m.kind = FunctionSpec::Kind::monomial;
  m.m = 6;
  const auto f = make_function(m);
  for (int mm = 2; mm <= 8; ++mm)
    for (int j = 1; j < mm; ++j) {
      VerifyParams p;
      p.j = j, p.m = mm;
      const auto r = verify_on_function(f, InequalityKind::cg, p);
      EXPECT_TRUE(r.pass) << "j=" << j << " m=" << mm;
      EXPECT_GE(r.margin, 1.0);
    }
  VerifyParams p;
  p.p = 2.0;
  EXPECT_THROW(verify_on_function(f, InequalityKind::cg, p), InputError);
}

TEST(Calibrate, ConstantsMakeBoundsHold) {
  FunctionSpec s, g;
  s.kind = FunctionSpec::Kind::sin;
  g.kind = FunctionSpec::Kind::gaussian;
  const std::vector<SampledFunction> corpus = {make_function(s), make_function(g)};
  const auto c = calibrate(corpus, 6);
  EXPECT_GT(c.C_taylor, 0.0);
  EXPECT_GT(c.C_mixed, 0.0);
  EXPECT_FALSE(c.taylor_witness.empty());
  VerifyParams p;
  p.geometry.C_taylor = c.C_taylor * (1 + 1e-9);
  p.geometry.C_mixed = c.C_mixed * (1 + 1e-9);
  for (int m = 2; m <= 6; ++m)
    for (int j = 1; j < m; ++j) {
      p.j = j, p.m = m;
      for (const auto& f : corpus) {
        EXPECT_TRUE(verify_on_function(f, InequalityKind::taylor, p).pass);
        EXPECT_TRUE(verify_on_function(f, InequalityKind::mixed, p).pass);
      }
    }
}
