#pragma once

// Truncated Taylor series a_0 + a_1 h + ... + a_n h^n about a point.
// Only what the corpus needs: ring operations and a few elementary functions.

#include <vector>

namespace ultraweights {

struct Jet {
  std::vector<double> c;

  Jet() = default;
  explicit Jet(int order, double value = 0.0) : c(static_cast<std::size_t>(order) + 1, 0.0) { c[0] = value; }

  /// the identity x + h at x
  static Jet variable(int order, double x);

  int order() const noexcept { return static_cast<int>(c.size()) - 1; }
  /// k-th derivative at the expansion point, k! a_k
  double derivative(int k) const;
};

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator*(double s, const Jet& a);
Jet reciprocal(const Jet& a);
Jet exp(const Jet& a);
Jet pow(const Jet& a, int n);
/// sin and cos together (they share the recurrence)
void sincos(const Jet& a, Jet& s, Jet& c);
void sinhcosh(const Jet& a, Jet& s, Jet& c);

}  // namespace ultraweights
