#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "ultraweights/errors.hpp"
#include "ultraweights/lacunary.hpp"

using namespace ultraweights;

namespace {

constexpr double e = std::numbers::e;

LacunaryInput gevrey_input(double s, int K, long long step) {
  LacunaryInput in;
  in.M = WeightSequence::gevrey(s, K);
  in.k = BaseSequence::linear(step, K);
  return in;
}

}  // namespace

TEST(Global, Constants) {
  auto in = gevrey_input(1.0, 64, 2);
  const auto c = propagate_global(in);
  EXPECT_EQ(c.L, 64);
  EXPECT_NEAR(c.C_out, 2.0, 1e-12);
  EXPECT_NEAR(c.rho_out, 4.0 * e, 1e-12);
  EXPECT_NEAR(c.constant("C2"), 2.0, 1e-12);
  EXPECT_THROW(c.constant("nope"), InputError);
  EXPECT_FALSE(soundness_violation(c, in.M));
  in.n = 2;
  EXPECT_NEAR(propagate_global(in).rho_out, 8.0 * e, 1e-12);
}

TEST(Global, InputBoundsAreKept) {
  auto in = gevrey_input(1.0, 32, 2);
  const auto c = propagate_global(in, 20);
  ASSERT_EQ(c.B.size(), 21u);
  EXPECT_EQ(c.B[0], 0.0);
  for (int kj = 2; kj <= 20; kj += 2) EXPECT_EQ(c.B[kj], kj * std::log(static_cast<double>(kj)));
  for (const auto& s : c.chain_trace)
    if (s.ell % 2) {
      EXPECT_EQ(s.k_lo, s.ell - 1);
      EXPECT_EQ(s.k_hi, s.ell + 1);
    }
}

TEST(Global, Errors) {
  auto in = gevrey_input(1.0, 32, 2);
  EXPECT_THROW(propagate_global(in, 40), InputError);
  EXPECT_THROW(propagate_global(in, -1), InputError);
  in.Mprime = WeightSequence::gevrey(0.5, 32);
  EXPECT_THROW(propagate_global(in), HypothesisError);
  in.Mprime.reset();
  in.rho = 0.0;
  EXPECT_THROW(propagate_global(in), InputError);
  in.rho = 1.0;
  in.log_bounds = {0.0, 1.0};
  EXPECT_THROW(propagate_global(in), InputError);
}

TEST(Global, DoubleExponentialBaseFails) {
  LacunaryInput in;
  in.M = WeightSequence::gevrey(1.0, 512);
  in.k = BaseSequence::double_exponential(512);
  try {
    propagate_global(in);
    FAIL() << "expected HypothesisError";
  } catch (const HypothesisError& err) {
    EXPECT_FALSE(err.witness().empty());
  }
}

TEST(Local, RoumieuAndBeurling) {
  auto in = gevrey_input(2.0, 128, 4);
  in.n = 2;
  const auto r = propagate_local(in, {}, 2.0, false);
  EXPECT_GT(r.rho_out, 0.0);
  EXPECT_GT(r.constant("A"), 0.0);
  EXPECT_FALSE(soundness_violation(r, in.M));
  const auto b = propagate_local(in, {}, 2.0, true);
  EXPECT_GE(b.constant("j_tau"), 1.0);
  EXPECT_FALSE(soundness_violation(b, in.M));
  EXPECT_THROW(propagate_local(in, {}, 0.0, false), InputError);
}

TEST(Moment, Factors) {
  EXPECT_EQ(moment_factor(3, 0), 1.0);
  EXPECT_EQ(moment_factor(3, 1), 3.0);
  EXPECT_NEAR(moment_factor(4, 2), 16.0, 1e-12);
  auto in = gevrey_input(1.0, 64, 2);
  in.n = 4;
  const auto c = propagate_moment(in, {}, 1.5);
  EXPECT_NEAR(c.rho_out, 8.0 * c.constant("C2") * 1.5, 1e-12);
  EXPECT_FALSE(soundness_violation(c, in.M));
}

TEST(IntervalCg, Constants) {
  auto in = gevrey_input(1.0, 64, 2);
  const auto c = propagate_interval_cg(in, {}, 2.0, false);
  EXPECT_NEAR(c.constant("E"), e, 1e-12);
  EXPECT_NEAR(c.constant("C2"), 2.0, 1e-12);
  EXPECT_NEAR(c.rho_out, 2.0 * e * e * e * std::max(1.0, c.constant("A") / 2.0), 1e-9);
  EXPECT_FALSE(soundness_violation(c, in.M));
  in.n = 2;
  EXPECT_THROW(propagate_interval_cg(in, {}, 2.0, false), InputError);
}

TEST(IntervalCg, SigmaTarget) {
  auto in = gevrey_input(2.0, 64, 2);
  const auto c = propagate_interval_cg(in, {}, 2.0, true, 200.0);
  EXPECT_LE(c.rho_out, 200.0 * (1 + 1e-9));
  EXPECT_NEAR(c.constant("sigma_target"), 200.0, 0.0);
  EXPECT_THROW(propagate_interval_cg(in, {}, 2.0, true, -1.0), InputError);
}

TEST(Soundness, DetectsInflatedBound) {
  auto in = gevrey_input(1.0, 32, 2);
  auto c = propagate_global(in);
  c.B[7] += 100.0;
  ASSERT_TRUE(soundness_violation(c, in.M));
  EXPECT_EQ(*soundness_violation(c, in.M), 7);
}

TEST(Polarization, LogFactor) {
  EXPECT_EQ(log_polarization_factor(0), 0.0);
  EXPECT_NEAR(log_polarization_factor(1), 0.0, 1e-15);
  EXPECT_NEAR(log_polarization_factor(2), std::log(3.0), 1e-13);
}

TEST(Verdict, GevreySettings) {
  const auto M = WeightSequence::gevrey(2.0, 512);
  const auto k = BaseSequence::linear(2, 512);
  for (auto s : {Setting::B_Lp, Setting::D, Setting::E_Lp_roumieu, Setting::E_Lp_beurling, Setting::S,
                 Setting::B_Linfty_interval}) {
    const auto v = equality_verdict(M, k, s);
    EXPECT_TRUE(v.applies()) << to_string(s) << ": " << v.failed_check;
    EXPECT_FALSE(v.checklist.empty());
  }
  EXPECT_EQ(parse_setting("S"), Setting::S);
  EXPECT_THROW(parse_setting("X"), InputError);
}

TEST(Verdict, LacunaryRatioFails) {
  const auto M = WeightSequence::gevrey(1.0, 512);
  const auto v = equality_verdict(M, BaseSequence::double_exponential(512), Setting::B_Lp);
  EXPECT_TRUE(v.failed());
  EXPECT_EQ(v.failed_check, "lacunary_ratio");
  EXPECT_FALSE(v.witness.empty());
}

TEST(Verdict, WeightFunction) {
  const WeightFunction w{WeightFunctionSpec{}};
  const auto v = equality_verdict(w, BaseSequence::linear(2, 256), Setting::B_Lp);
  EXPECT_FALSE(v.failed()) << v.failed_check;
  EXPECT_EQ(v.K, 256);
}
