#include <string>

#include <gtest/gtest.h>

#include "ultraweights/construct.hpp"
#include "ultraweights/errors.hpp"
#include "ultraweights/serialize.hpp"

using namespace ultraweights;

namespace {

const CounterexampleWitness& two_step() {
  static const CounterexampleWitness w = build_counterexample(FamilySpec{}, 2);
  return w;
}

}  // namespace

TEST(Construct, GevreyIndices) {
  const auto& w = two_step();
  ASSERT_EQ(w.jmax, 2);
  EXPECT_EQ(w.ell[0], "1");
  EXPECT_EQ(w.k[0], "4");
  EXPECT_EQ(w.ell[1], "5");
  // 2^50 5^20 - 250
  EXPECT_EQ(w.k[1], "107374182399999999999999999750");
  EXPECT_NEAR(std::stod(w.logNu2_ell[1]), 47.2192809, 1e-6);
}

TEST(Construct, VerifiesAndIsMinimal) {
  const auto& w = two_step();
  const auto r = verify_counterexample(w);
  EXPECT_EQ(r.verdict, Verdict::holds_on_truncation) << r.note;
  EXPECT_EQ(minimality_check(w).verdict, Verdict::holds_on_truncation);
}

TEST(Construct, TamperedValueFails) {
  auto w = two_step();
  w.logN2_ell[0] = std::to_string(std::stod(w.logN2_ell[0]) + 1.0);
  const auto r = verify_counterexample(w);
  EXPECT_TRUE(r.failed());
  EXPECT_NE(r.note.find("value of N at l_j"), std::string::npos) << r.note;
  ASSERT_EQ(r.witness.size(), 1u);
  EXPECT_EQ(r.witness[0], 1);
}

TEST(Construct, BrokenInterlacing) {
  auto w = two_step();
  w.ell[1] = "3";
  const auto r = verify_counterexample(w);
  EXPECT_TRUE(r.failed());
  EXPECT_NE(r.note.find("interlacing"), std::string::npos);
}

TEST(Construct, ThirdStepOverflows) {
  EXPECT_THROW(build_counterexample(FamilySpec{}, 3), NumericalError);
  EXPECT_THROW(build_counterexample(FamilySpec{}, 0), InputError);
}

TEST(Construct, JsonRoundTrip) {
  const auto& w = two_step();
  const auto back = parse_witness(to_json(w));
  EXPECT_EQ(back.k, w.k);
  EXPECT_EQ(back.ell, w.ell);
  EXPECT_EQ(back.logN2_k, w.logN2_k);
  EXPECT_EQ(back.logNu2_ell, w.logNu2_ell);
  EXPECT_EQ(verify_counterexample(back).verdict, Verdict::holds_on_truncation);
}

TEST(Construct, FamilyLog) {
  // log2 M^(2)_4 = 2 * 4 * log2 4
  EXPECT_NEAR(std::stod(family_log2(FamilySpec{}, 2.0, "4")), 16.0, 1e-12);
  EXPECT_FALSE(check_family(FamilySpec{}).failed());
}
