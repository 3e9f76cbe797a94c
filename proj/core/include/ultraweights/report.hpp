#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ultraweights {

enum class Verdict { holds_on_truncation, fails, inconclusive };
enum class Trend { bounded, vanishing, growing };

const char* to_string(Verdict v) noexcept;
const char* to_string(Trend t) noexcept;

/// Shortest round-trip decimal for a double; "inf", "-inf", "nan" otherwise.
std::string shortest(double x);

/// Thresholds for the tail heuristic: the max over the last third of a
/// sequence is divided by the max over the middle third.
struct TrendThresholds {
  double vanishing = 0.75;  ///< ratio <= vanishing  -> vanishing
  double bounded = 1.05;    ///< ratio <= bounded    -> bounded, else growing
};

/// Classifies a finite sequence given by its natural logarithms. Returns
/// nullopt when the middle or last third is empty (fewer than 2 values).
std::optional<Trend> classify_trend(std::span<const double> log_values,
                                    const TrendThresholds& th = {});

/// Result of evaluating an asymptotic condition on a finite truncation.
/// `holds_on_truncation` is never a proof; it is evidence up to index K.
struct ConditionReport {
  std::string name;
  double index_value = 0.0;      // +inf when the index overflows
  double log_index_value = 0.0;  // natural log of index_value when meaningful
  Verdict verdict = Verdict::inconclusive;
  std::vector<long long> witness;
  std::optional<Trend> trend;
  long long K = 0;
  std::string note;
  std::vector<std::pair<std::string, double>> details;

  bool failed() const noexcept { return verdict == Verdict::fails; }
};

/// Builds a "sup is bounded" report from a log-domain profile. `indices[i]`
/// is the witness index attached to `log_values[i]`.
ConditionReport bounded_report(std::string name, std::span<const double> log_values,
                               std::span<const long long> indices, long long K,
                               const TrendThresholds& th = {});

}  // namespace ultraweights
