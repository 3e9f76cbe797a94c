#pragma once

// Weight functions omega, phi(t) = omega(e^t), the Legendre conjugate phi*,
// and the associated family M^(rho)_k = exp(phi*(rho k) / rho).

#include <string>
#include <vector>

#include "ultraweights/report.hpp"
#include "ultraweights/specs.hpp"
#include "ultraweights/weightseq.hpp"

namespace ultraweights {

class WeightFunction {
 public:
  explicit WeightFunction(WeightFunctionSpec spec);

  double omega(double t) const;
  /// omega(e^t), evaluated in closed form so that large t does not overflow
  /// through e^t.
  double phi(double t) const;

  const WeightFunctionSpec& spec() const noexcept { return spec_; }
  /// True when omega vanishes on [0, 1].
  bool vanishes_on_unit_interval() const noexcept;
  std::string label() const;

 private:
  double raw_omega(double t) const;
  double raw_phi(double t) const;

  WeightFunctionSpec spec_;
  double omega_at_one_ = 0.0;
};

struct ValidityGrid {
  double t_min = 1e-2;
  double t_max = 1e6;
  int points = 4096;
};

/// Grid evidence for the weight-function axioms. Each report carries the grid
/// index of its extremum or violation.
struct WeightFunctionValidity {
  ConditionReport zero_at_origin;
  ConditionReport monotone;
  ConditionReport convex_phi;
  ConditionReport log_little_o;  // omega(t) / log t growing
  ConditionReport doubling;      // omega(2t) / omega(t) bounded
  bool ok() const noexcept;
};
WeightFunctionValidity validate(const WeightFunction& w, const ValidityGrid& grid = {});

struct ConjugateOptions {
  double t_max = 1e8;            // bracket ceiling
  double rel_width = 1e-12;      // final bracket width relative to max(1, t)
  int max_iterations = 400;
};

/// phi*(s) = sup_{t >= 0} (s t - phi(t)) by golden-section search on the
/// concave map t -> s t - phi(t). Throws NumericalError when the bracket
/// does not close below t_max.
double conjugate(const WeightFunction& w, double s, const ConjugateOptions& opt = {});

/// Maximiser t of s t - phi(t), same search as conjugate().
double conjugate_argmax(const WeightFunction& w, double s, const ConjugateOptions& opt = {});

struct AssociatedSequence {
  double rho = 1.0;
  std::vector<double> logM;  // phi*(rho k) / rho, unshifted
  double shift = 0.0;        // logM[0]; subtracted by to_weight_sequence()
  std::string label;

  int K() const noexcept { return static_cast<int>(logM.size()) - 1; }
  double log_m(int k) const { return k == 0 ? logM[1] : logM[static_cast<std::size_t>(k)] / k; }
  WeightSequence to_weight_sequence() const;
};

AssociatedSequence associated_sequence(const WeightFunction& w, double rho, int K,
                                       const ConjugateOptions& opt = {});

struct AbsorptionStep {
  double H;
  double log_sup;
  double log_tail_sup;
  bool stable;
};

struct Absorption {
  double H = 1.0;
  double C = 1.0;        // max(1, exp(log_sup))
  double log_sup = 0.0;  // sup_k [k ln sigma + ln M^(rho)_k - ln M^(H rho)_k]
  std::vector<AbsorptionStep> trajectory;
};

/// Smallest H in {1, 2, 4, ...} <= H_max with sigma^k M^(rho)_k <= C M^(H rho)_k
/// on the truncation and a non-increasing tail. Throws NumericalError with the
/// trajectory in the message when no candidate works.
Absorption bmt_absorption(const WeightFunction& w, double sigma, double rho, int K,
                          double H_max = 1 << 20);

/// M^(rho)_{j+k} <= M^(2 rho)_j M^(2 rho)_k for all j + k <= K.
/// index_value holds the worst margin (log domain), witness the pair (j, k).
ConditionReport ommg_check(const WeightFunction& w, double rho, int K);

}  // namespace ultraweights
