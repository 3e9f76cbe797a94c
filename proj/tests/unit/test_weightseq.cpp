#include <cmath>

#include <gtest/gtest.h>

#include "ultraweights/errors.hpp"
#include "ultraweights/weightseq.hpp"

using namespace ultraweights;

namespace {

double detail(const ConditionReport& r, const std::string& name) {
  for (const auto& [k, v] : r.details)
    if (k == name) return v;
  ADD_FAILURE() << "no detail " << name << " in " << r.name;
  return NAN;
}

}  // namespace

TEST(WeightSequence, GevreyValues) {
  const auto M = WeightSequence::gevrey(2.0, 64);
  EXPECT_EQ(M.K(), 64);
  EXPECT_DOUBLE_EQ(M.log_M(0), 0.0);
  EXPECT_DOUBLE_EQ(M.log_M(1), 0.0);
  EXPECT_NEAR(M.log_M(3), 6.0 * std::log(3.0), 1e-12);
  EXPECT_NEAR(M.log_m(5), 2.0 * std::log(5.0), 1e-12);
  EXPECT_DOUBLE_EQ(M.log_m(0), M.log_m(1));
  EXPECT_TRUE(M.is_weight_sequence());
}

TEST(WeightSequence, FactorialPower) {
  const auto M = WeightSequence::factorial_power(1.0, 20);
  EXPECT_NEAR(M.log_M(5), std::log(120.0), 1e-12);
  EXPECT_NEAR(M.log_mu(5), std::log(5.0), 1e-12);
}

TEST(WeightSequence, TableValidation) {
  EXPECT_THROW(WeightSequence::from_log_table({0, 1, 2}), InputError);
  std::vector<double> t(10, 0.0);
  t[0] = 1.0;
  EXPECT_THROW(WeightSequence::from_log_table(t), InputError);
  t[0] = 0.0;
  t[4] = NAN;
  EXPECT_THROW(WeightSequence::from_log_table(t), InputError);
}

TEST(WeightSequence, AxiomWitness) {
  // mu drops at k = 4
  std::vector<double> logM = {0, 1, 3, 6, 7, 9, 12, 16, 21, 27};
  const auto M = WeightSequence::from_log_table(logM);
  EXPECT_FALSE(M.is_weight_sequence());
  ASSERT_TRUE(M.axiom_witness());
  EXPECT_EQ(*M.axiom_witness(), 4);
}

TEST(BaseSequence, Constructors) {
  EXPECT_THROW(BaseSequence({1, 2}), InputError);
  EXPECT_THROW(BaseSequence({0, 3, 3}), InputError);
  const auto lin = BaseSequence::linear(3, 10);
  EXPECT_EQ(lin.size(), 4u);
  EXPECT_EQ(lin.last(), 9);
  const auto geo = BaseSequence::geometric(2, 20);
  EXPECT_EQ(std::vector<long long>(geo.k().begin(), geo.k().end()), (std::vector<long long>{0, 1, 2, 4, 8, 16}));
  const auto de = BaseSequence::double_exponential(300);
  EXPECT_EQ(std::vector<long long>(de.k().begin(), de.k().end()), (std::vector<long long>{0, 4, 16, 256}));
  EXPECT_EQ(lin.bracket(4), 1u);
  EXPECT_TRUE(lin.contains(6));
  EXPECT_FALSE(lin.contains(7));
}

TEST(Growth, GevreyModerateGrowth) {
  const auto M = WeightSequence::gevrey(1.0, 256);
  const auto g = growth_indices(M);
  EXPECT_EQ(g.mg.verdict, Verdict::holds_on_truncation);
  // (j+k)^{j+k} / (j^j k^k) <= 2^{j+k}
  EXPECT_LE(g.mg.index_value, 2.0 + 1e-12);
  EXPECT_EQ(g.dc.verdict, Verdict::holds_on_truncation);
}

TEST(Growth, SquareExponentFailsModerateGrowth) {
  // M_j = 2^{j^2}: (M_{k+1}/M_k)^{1/(k+1)} = 2^{(2k+1)/(k+1)} -> 4, while mg grows like 2^{2jk/(j+k)}
  std::vector<double> logM(129);
  for (int j = 0; j <= 128; ++j) logM[j] = j * j * std::log(2.0);
  const auto M = WeightSequence::from_log_table(logM);
  const auto g = growth_indices(M);
  EXPECT_NE(g.dc.verdict, Verdict::fails);
  EXPECT_LE(g.dc.index_value, 4.0);
  EXPECT_EQ(g.mg.verdict, Verdict::fails);
  EXPECT_EQ(g.mg.witness.size(), 2u);
}

TEST(Lacunary, RatioForLinearBase) {
  const auto M = WeightSequence::gevrey(2.0, 512);
  const auto r = lacunary_ratio(M, BaseSequence::linear(2, 512));
  EXPECT_EQ(r.verdict, Verdict::holds_on_truncation);
  // m_{2j+2}/m_{2j} = ((j+1)/j)^2 <= 4
  EXPECT_NEAR(r.index_value, 4.0, 1e-9);
}

TEST(Lacunary, RatioFailsForDoubleExponentialBase) {
  const auto M = WeightSequence::gevrey(1.0, 512);
  const auto r = lacunary_ratio(M, BaseSequence::double_exponential(512));
  EXPECT_EQ(r.verdict, Verdict::fails);
  ASSERT_FALSE(r.witness.empty());
  EXPECT_NEAR(detail(r, "j0_ratio"), 4.0, 1e-12);
}

TEST(Lacunary, TruncationTooShort) {
  const auto M = WeightSequence::gevrey(1.0, 16);
  EXPECT_THROW(lacunary_ratio(M, BaseSequence::linear(2, 40)), InputError);
}

TEST(BaseCheck, SpecialAndNot) {
  EXPECT_EQ(base_sequence_check(BaseSequence::linear(2, 512)).verdict, Verdict::holds_on_truncation);
  EXPECT_EQ(base_sequence_check(BaseSequence::geometric(3, 1000)).verdict, Verdict::holds_on_truncation);
  EXPECT_EQ(base_sequence_check(BaseSequence::double_exponential(1 << 20)).verdict, Verdict::fails);
  EXPECT_EQ(base_sequence_check(BaseSequence({0, 1})).verdict, Verdict::inconclusive);
}

TEST(AnalyticInclusion, Trends) {
  EXPECT_EQ(*analytic_inclusion_index(WeightSequence::gevrey(1.0, 256)).trend, Trend::bounded);
  EXPECT_EQ(*analytic_inclusion_index(WeightSequence::gevrey(2.0, 256)).trend, Trend::vanishing);
  EXPECT_EQ(analytic_inclusion_index(WeightSequence::gevrey(0.5, 256)).verdict, Verdict::fails);
}

TEST(Liess, GevreyTwo) {
  const auto rs = liess_report(WeightSequence::gevrey(2.0, 256), 3);
  ASSERT_EQ(rs.size(), 4u);
  EXPECT_EQ(rs[2].name, "liess_c");
  EXPECT_NEAR(detail(rs[2], "g(2)"), 4.0, 1e-9);
  EXPECT_NEAR(detail(rs[2], "g(3)"), 9.0, 1e-9);
  EXPECT_EQ(rs[3].name, "liess_d");
  EXPECT_NEAR(detail(rs[3], "a(2)"), 4.0, 1e-6);
}

TEST(Albano, GevreyHolds) {
  const auto a = albano_check(WeightSequence::gevrey(1.0, 256));
  EXPECT_EQ(a.albano.verdict, Verdict::holds_on_truncation);
  EXPECT_NE(a.albano2.verdict, Verdict::fails);
  EXPECT_GE(a.C, 1.0);
  EXPECT_TRUE(a.consistent_with_growth);
}

TEST(Specs, BuildSequenceAndBase) {
  SequenceSpec s;
  s.kind = SequenceSpec::Kind::table;
  s.table = {1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880};
  s.table_is_log = false;
  const auto M = build_sequence(s);
  EXPECT_NEAR(M.log_M(4), std::log(24.0), 1e-12);
  BaseSpec b;
  b.kind = BaseSpec::Kind::list;
  b.list = {0, 2, 5};
  EXPECT_EQ(build_base(b).last(), 5);
}
