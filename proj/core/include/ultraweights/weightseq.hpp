#pragma once

// Weight sequences M = (M_j) in natural-log storage, base sequences (k_j),
// and the growth/regularity checks evaluated on finite truncations.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ultraweights/report.hpp"
#include "ultraweights/specs.hpp"

namespace ultraweights {

inline constexpr int kMinTruncation = 8;
inline constexpr int kDefaultTruncation = 512;

class WeightSequence {
 public:
  /// logM[0] must be 0 and the table must have at least kMinTruncation + 1
  /// finite entries. Throws InputError naming the offending index.
  static WeightSequence from_log_table(std::vector<double> logM, std::string label = "table");
  /// Same as from_log_table for raw values M_j > 0.
  static WeightSequence from_values(std::span<const double> M, std::string label = "table");
  /// M_j = j^{s j}.
  static WeightSequence gevrey(double s, int K = kDefaultTruncation);
  /// M_j = (j!)^s.
  static WeightSequence factorial_power(double s, int K = kDefaultTruncation);

  int K() const noexcept { return static_cast<int>(logM_.size()) - 1; }
  const std::string& label() const noexcept { return label_; }
  std::span<const double> log_M() const noexcept { return logM_; }
  double log_M(int j) const { return logM_.at(static_cast<std::size_t>(j)); }

  /// ln m_j = ln M_j / j for j >= 1. Index 0 returns ln m_1 (the convention
  /// used whenever k_0 = 0 appears in a ratio).
  double log_m(int j) const;
  /// ln mu_k = ln M_k - ln M_{k-1}; index 0 returns 0.
  double log_mu(int k) const;

  /// 1 = M_0 <= M_1 <= mu_2 <= mu_3 <= ... on the stored range.
  bool is_weight_sequence() const noexcept { return is_weight_sequence_; }
  /// First index where the weight-sequence axioms fail, if any.
  std::optional<int> axiom_witness() const noexcept { return axiom_witness_; }

  /// t^k M_k.
  WeightSequence scaled(double t) const;
  WeightSequence truncated(int K) const;

 private:
  WeightSequence(std::vector<double> logM, std::string label);

  std::vector<double> logM_;
  std::string label_;
  bool is_weight_sequence_ = false;
  std::optional<int> axiom_witness_;
};

/// Strictly increasing orders k_0 = 0 < k_1 < k_2 < ...
class BaseSequence {
 public:
  explicit BaseSequence(std::vector<long long> k);

  static BaseSequence linear(long long step, long long max_order);
  /// k_0 = 0, k_j = b^{j-1} for j >= 1.
  static BaseSequence geometric(long long b, long long max_order);
  /// k_0 = 0, k_j = 2^{2^j} for j >= 1.
  static BaseSequence double_exponential(long long max_order);

  std::span<const long long> k() const noexcept { return k_; }
  long long operator[](std::size_t j) const { return k_.at(j); }
  std::size_t size() const noexcept { return k_.size(); }
  long long last() const noexcept { return k_.back(); }

  /// Index j with k_j <= ell < k_{j+1}; requires ell < last().
  std::size_t bracket(long long ell) const;
  bool contains(long long ell) const;

 private:
  std::vector<long long> k_;
};

struct SequenceProfile {
  std::vector<double> log_mu;
  std::vector<double> log_m;
};

WeightSequence build_sequence(const SequenceSpec& spec);
BaseSequence build_base(const BaseSpec& spec);

SequenceProfile sequence_profile(const WeightSequence& M);

struct GrowthIndices {
  ConditionReport dc;  // sup_k (M_{k+1}/M_k)^{1/(k+1)}
  ConditionReport mg;  // sup_{j,k>=1} (M_{j+k}/(M_j M_k))^{1/(j+k)}
};
GrowthIndices growth_indices(const WeightSequence& M, const TrendThresholds& th = {});

ConditionReport base_sequence_check(const BaseSequence& k, const TrendThresholds& th = {});

/// sup_{j>=1} m_{k_{j+1}} / m'_{k_j}. The j = 0 term m_{k_1}/m'_1 is recorded
/// under details["j0_ratio"]; it does not affect boundedness.
ConditionReport lacunary_ratio(const WeightSequence& M, const BaseSequence& k,
                               const WeightSequence* Mprime = nullptr,
                               const TrendThresholds& th = {});

/// sup_j j / m_j with a bounded / vanishing / growing trend.
ConditionReport analytic_inclusion_index(const WeightSequence& M, const TrendThresholds& th = {});

/// Conditions (a)-(d) used by Liess for the necessity direction.
std::vector<ConditionReport> liess_report(const WeightSequence& M, int n_probe,
                                          const TrendThresholds& th = {});

struct AlbanoReport {
  ConditionReport albano;        // exists i0: m_j <= m_i m_k for i, j > i0, i < j < ik
  ConditionReport albano2;       // smallest C with m_j <= C m_i m_k
  ConditionReport mg_special;    // m_{2i} / (m_i m_3): the k = 3, j = 2i specialisation
  int i0 = 0;
  double C = 1.0;
  bool consistent_with_growth = true;  // mg_special holds => growth_indices().mg holds
};
AlbanoReport albano_check(const WeightSequence& M, const TrendThresholds& th = {});

}  // namespace ultraweights
