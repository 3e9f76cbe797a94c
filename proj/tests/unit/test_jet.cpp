#include <cmath>

#include <gtest/gtest.h>

#include "ultraweights/jet.hpp"

using namespace ultraweights;

TEST(Jet, ProductRule) {
  const Jet x = Jet::variable(6, 0.5);
  const Jet f = x * x * x;  // x^3
  EXPECT_NEAR(f.derivative(0), 0.125, 1e-15);
  EXPECT_NEAR(f.derivative(1), 0.75, 1e-15);
  EXPECT_NEAR(f.derivative(2), 3.0, 1e-15);
  EXPECT_NEAR(f.derivative(3), 6.0, 1e-15);
  EXPECT_NEAR(f.derivative(4), 0.0, 1e-15);
}

TEST(Jet, ExpAndReciprocal) {
  const Jet x = Jet::variable(10, 0.3);
  const Jet e = exp(2.0 * x);
  for (int k = 0; k <= 10; ++k) EXPECT_NEAR(e.derivative(k), std::pow(2.0, k) * std::exp(0.6), 1e-9 * std::pow(2.0, k));
  // 1/(1 - x): k! / (1 - x)^{k+1}
  const Jet one(10, 1.0);
  const Jet g = reciprocal(one - x);
  double fact = 1.0;
  for (int k = 0; k <= 10; ++k) {
    if (k) fact *= k;
    EXPECT_NEAR(g.derivative(k), fact / std::pow(0.7, k + 1), 1e-9 * fact / std::pow(0.7, k + 1));
  }
}

TEST(Jet, Trig) {
  const Jet x = Jet::variable(8, 1.1);
  Jet s, c;
  sincos(x, s, c);
  EXPECT_NEAR(s.derivative(1), std::cos(1.1), 1e-14);
  EXPECT_NEAR(s.derivative(2), -std::sin(1.1), 1e-14);
  EXPECT_NEAR(c.derivative(3), std::sin(1.1), 1e-13);
  Jet sh, ch;
  sinhcosh(x, sh, ch);
  EXPECT_NEAR(ch.derivative(2), std::cosh(1.1), 1e-12);
  EXPECT_NEAR(pow(x, 4).derivative(4), 24.0, 1e-12);
}
