#include "ultraweights/jet.hpp"

#include <algorithm>
#include <cmath>

#include "ultraweights/errors.hpp"

namespace ultraweights {

Jet Jet::variable(int order, double x) {
  Jet j(order, x);
  if (order >= 1) j.c[1] = 1.0;
  return j;
}

double Jet::derivative(int k) const {
  if (k < 0 || k > order()) throw InputError("jet order exceeded");
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f * c[static_cast<std::size_t>(k)];
}

static void same_order(const Jet& a, const Jet& b) {
  if (a.c.size() != b.c.size()) throw InputError("jet orders differ");
}

Jet operator+(const Jet& a, const Jet& b) {
  same_order(a, b);
  Jet r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

Jet operator-(const Jet& a, const Jet& b) {
  same_order(a, b);
  Jet r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}

Jet operator*(const Jet& a, const Jet& b) {
  same_order(a, b);
  const std::size_t n = a.c.size();
  Jet r;
  r.c.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c[i] == 0.0) continue;
    for (std::size_t j = 0; i + j < n; ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  return r;
}

Jet operator*(double s, const Jet& a) {
  Jet r = a;
  for (auto& v : r.c) v *= s;
  return r;
}

Jet reciprocal(const Jet& a) {
  if (a.c[0] == 0.0) throw NumericalError("reciprocal of a jet with zero constant term");
  const std::size_t n = a.c.size();
  Jet r;
  r.c.assign(n, 0.0);
  r.c[0] = 1.0 / a.c[0];
  for (std::size_t k = 1; k < n; ++k) {
    double s = 0.0;
    for (std::size_t i = 1; i <= k; ++i) s += a.c[i] * r.c[k - i];
    r.c[k] = -s * r.c[0];
  }
  return r;
}

// e = exp(a):  k e_k = sum_{i=1}^k i a_i e_{k-i}
Jet exp(const Jet& a) {
  const std::size_t n = a.c.size();
  Jet r;
  r.c.assign(n, 0.0);
  r.c[0] = std::exp(a.c[0]);
  for (std::size_t k = 1; k < n; ++k) {
    double s = 0.0;
    for (std::size_t i = 1; i <= k; ++i) s += static_cast<double>(i) * a.c[i] * r.c[k - i];
    r.c[k] = s / static_cast<double>(k);
  }
  return r;
}

Jet pow(const Jet& a, int n) {
  if (n < 0) return reciprocal(pow(a, -n));
  Jet r(a.order(), 1.0);
  Jet base = a;
  while (n > 0) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

void sincos(const Jet& a, Jet& s, Jet& c) {
  const std::size_t n = a.c.size();
  s.c.assign(n, 0.0);
  c.c.assign(n, 0.0);
  s.c[0] = std::sin(a.c[0]);
  c.c[0] = std::cos(a.c[0]);
  for (std::size_t k = 1; k < n; ++k) {
    double ss = 0.0, cc = 0.0;
    for (std::size_t i = 1; i <= k; ++i) {
      const double w = static_cast<double>(i) * a.c[i];
      ss += w * c.c[k - i];
      cc -= w * s.c[k - i];
    }
    s.c[k] = ss / static_cast<double>(k);
    c.c[k] = cc / static_cast<double>(k);
  }
}

void sinhcosh(const Jet& a, Jet& s, Jet& c) {
  const std::size_t n = a.c.size();
  s.c.assign(n, 0.0);
  c.c.assign(n, 0.0);
  s.c[0] = std::sinh(a.c[0]);
  c.c[0] = std::cosh(a.c[0]);
  for (std::size_t k = 1; k < n; ++k) {
    double ss = 0.0, cc = 0.0;
    for (std::size_t i = 1; i <= k; ++i) {
      const double w = static_cast<double>(i) * a.c[i];
      ss += w * c.c[k - i];
      cc += w * s.c[k - i];
    }
    s.c[k] = ss / static_cast<double>(k);
    c.c[k] = cc / static_cast<double>(k);
  }
}

}  // namespace ultraweights
