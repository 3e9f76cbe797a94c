#pragma once

// Test functions with exact higher derivatives, and their L^p norms.

#include <span>
#include <string>
#include <vector>

#include "ultraweights/specs.hpp"

namespace ultraweights {

struct Interval {
  double lo = -1.0;
  double hi = 1.0;
  double length() const noexcept { return hi - lo; }
};

/// How a member behaves on the whole real line.
enum class LineBehaviour {
  periodic,   // norms over one period; L^p for p < inf is infinite
  decaying,   // all derivatives decay fast; norms over a window
  unbounded,  // no finite norm on the line
};

class SampledFunction {
 public:
  static constexpr int kMaxOrder = 64;

  explicit SampledFunction(FunctionSpec spec);

  const FunctionSpec& spec() const noexcept { return spec_; }
  const std::string& name() const noexcept { return name_; }
  int dimension() const noexcept { return dim_; }
  bool is_polynomial() const noexcept;

  /// f, f', ..., f^(order) at x, written to out[0..order]. One-dimensional members only.
  void derivatives(double x, int order, std::span<double> out) const;
  double derivative(int order, double x) const;

  LineBehaviour on_line() const noexcept;
  /// One period, or a window outside which every derivative up to max_order is below 1e-12
  /// relative to its peak. Throws InputError for unbounded members.
  Interval line_domain(int max_order) const;

  /// Polynomial members: value and exact partial derivative at a point of R^n.
  double eval(std::span<const double> x) const;
  double partial(std::span<const int> alpha, std::span<const double> x) const;

 private:
  FunctionSpec spec_;
  std::string name_;
  int dim_ = 1;
};

SampledFunction make_function(const FunctionSpec& spec);

struct NormEstimate {
  double value = 0.0;
  double error = 0.0;  // last refinement increment
  int intervals = 0;
};

struct NormOptions {
  double rel_tol = 1e-8;
  int initial_intervals = 256;
  int max_doublings = 20;
};

/// Norms of f^(0..max_order) on dom for every exponent in ps (inf allowed).
/// Result is indexed [p][order]. Sup norms use a nested grid, finite p
/// composite Simpson; both are refined by doubling until every order changes by
/// less than rel_tol relative. Throws NumericalError after max_doublings.
std::vector<std::vector<NormEstimate>> norms(const SampledFunction& f, int max_order, std::span<const double> ps,
                                             Interval dom, const NormOptions& opt = {});

NormEstimate norm(const SampledFunction& f, int order, double p, Interval dom, const NormOptions& opt = {});

/// d^order/dt^order f(x + t v) at t = 0 for polynomial members; v must be a unit vector.
double directional_derivative(const SampledFunction& f, std::span<const double> v, int order,
                              std::span<const double> x);
/// Same without the unit-length check (polarization uses averaged directions).
double directional_derivative_any(const SampledFunction& f, std::span<const double> v, int order,
                                  std::span<const double> x);

}  // namespace ultraweights
