#pragma once

// Interpolation inequalities as bound calculators, Favard/Kolmogorov
// constants, the polarization identity, and empirical margin checks.

#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ultraweights/corpus.hpp"

namespace ultraweights {

inline constexpr double kInfNorm = std::numeric_limits<double>::infinity();

struct NormTriple {
  double f_norm = 0.0;
  double fm_norm = 0.0;
  int m = 1;
  double p = kInfNorm;
};

struct Geometry {
  double interval_len = 2.0;
  double a = 1.0;
  double dist = 1.0;
  int n = 1;
  double C_taylor = 10.0;
  double C_mixed = 10.0;
};

struct BoundResult {
  double value = 0.0;
  double log_value = -std::numeric_limits<double>::infinity();
  std::string formula_id;
  std::vector<std::pair<std::string, double>> inputs;
  std::vector<std::pair<std::string, double>> details;
};

/// k_r = 4/pi sum_i [(-1)^i / (2i+1)]^(r+1), summed with alternating-series
/// acceleration to absolute tolerance tol. Asserts 1 <= k_r <= 2.
double favard(int r, double tol = 1e-15);

/// K_{m,j} = k_{m-j} / k_m^(1-j/m); asserts K_{m,j} <= 2.
double kolmogorov_constant(int m, int j);

BoundResult lk_bound(const NormTriple& t, int j);
BoundResult taylor_bound(const Geometry& g, const NormTriple& t, int j);
BoundResult mixed_bound(const Geometry& g, const NormTriple& t, int j);
BoundResult cartan_gorny_bound(double interval_len, const NormTriple& t, int j);

struct PolarTerm {
  double coefficient = 0.0;
  int weight = 0;                  // number of selected vectors
  std::vector<double> direction;   // their average (not unit length in general)
};

/// Expansion of d^alpha as sum coefficient * d^l_direction over the
/// 2^l - 1 non-empty selections. Rejects |alpha| = 0 and |alpha| > 20.
std::vector<PolarTerm> polarization_expand(std::span<const int> alpha);

/// sum of coefficient * d^l_direction f(x) for a polynomial member.
double polarization_reconstruct(const SampledFunction& f, std::span<const int> alpha, std::span<const double> x);

enum class InequalityKind { lk, taylor, mixed, cg };
const char* to_string(InequalityKind k) noexcept;

struct VerifyParams {
  int j = 1;
  int m = 2;
  double p = kInfNorm;
  Interval interval{-1.0, 1.0};  // cg: I; taylor/mixed: [-a, a] with a = interval.hi
  Geometry geometry;
  double tol_discretization = 1e-6;
  NormOptions norm_options;
};

struct MarginReport {
  std::string function;
  InequalityKind kind = InequalityKind::lk;
  int j = 0;
  int m = 0;
  double p = kInfNorm;
  double lhs = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // bound / lhs, inf when lhs = 0
  double tolerance = 0.0;
  bool pass = false;
  bool skipped = false;  // right-hand side infinite for this member
  std::string note;
};

/// Derivative norms needed for one (kind, p) sweep, computed once.
struct NormTable {
  std::string function;
  double p = kInfNorm;
  std::vector<NormEstimate> inner;  // LHS domain (R window, I, or [-a, a])
  std::vector<NormEstimate> outer;  // RHS domain (same as inner except taylor/mixed: [-2a, 2a])
  bool infinite = false;            // right-hand side infinite (periodic member with p < inf, ...)
  std::string note;
};

NormTable norm_table(const SampledFunction& f, InequalityKind kind, const VerifyParams& params, int max_order);

MarginReport verify_from_table(const NormTable& t, InequalityKind kind, const VerifyParams& params);
MarginReport verify_on_function(const SampledFunction& f, InequalityKind kind, const VerifyParams& params);

struct Calibration {
  double C_taylor = 0.0;
  double C_mixed = 0.0;
  std::string taylor_witness;
  std::string mixed_witness;
};

/// Smallest constants that make the Taylor and mixed bounds hold on the given
/// members for all 1 <= j < m <= m_max, p = inf on [-a, a] inside [-2a, 2a].
Calibration calibrate(std::span<const SampledFunction> corpus, int m_max, double a = 1.0);

}  // namespace ultraweights
