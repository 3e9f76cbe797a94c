#include "ultraweights/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace ultraweights {

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::holds_on_truncation: return "holds_on_truncation";
    case Verdict::fails: return "fails";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(Trend t) noexcept {
  switch (t) {
    case Trend::bounded: return "bounded";
    case Trend::vanishing: return "vanishing";
    case Trend::growing: return "growing";
  }
  return "?";
}

std::string shortest(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::optional<Trend> classify_trend(std::span<const double> log_values, const TrendThresholds& th) {
  const std::size_t n = log_values.size();
  const std::size_t mid_lo = n / 3;
  const std::size_t last_lo = (2 * n) / 3;
  if (mid_lo >= last_lo || last_lo >= n) return std::nullopt;

  constexpr double ninf = -std::numeric_limits<double>::infinity();
  double mid = ninf;
  double last = ninf;
  for (std::size_t i = mid_lo; i < last_lo; ++i) mid = std::max(mid, log_values[i]);
  for (std::size_t i = last_lo; i < n; ++i) last = std::max(last, log_values[i]);

  if (std::isinf(mid) && mid < 0) return std::isinf(last) && last < 0 ? Trend::vanishing : Trend::growing;
  if (std::isinf(last) && last < 0) return Trend::vanishing;
  if (std::isinf(last) || std::isinf(mid)) return last > mid ? Trend::growing : Trend::bounded;

  const double log_ratio = last - mid;
  if (log_ratio <= std::log(th.vanishing)) return Trend::vanishing;
  if (log_ratio <= std::log(th.bounded)) return Trend::bounded;
  return Trend::growing;
}

ConditionReport bounded_report(std::string name, std::span<const double> log_values,
                               std::span<const long long> indices, long long K,
                               const TrendThresholds& th) {
  ConditionReport r;
  r.name = std::move(name);
  r.K = K;
  r.note = "truncation-level evidence";
  if (log_values.empty()) {
    r.verdict = Verdict::inconclusive;
    r.index_value = 0.0;
    r.log_index_value = -std::numeric_limits<double>::infinity();
    return r;
  }
  // first maximiser keeps reports deterministic under ties
  std::size_t arg = 0;
  for (std::size_t i = 1; i < log_values.size(); ++i)
    if (log_values[i] > log_values[arg]) arg = i;
  r.log_index_value = log_values[arg];
  r.index_value = std::exp(log_values[arg]);
  r.trend = classify_trend(log_values, th);
  if (!r.trend) {
    r.verdict = Verdict::inconclusive;
  } else if (*r.trend == Trend::growing) {
    r.verdict = Verdict::fails;
  } else {
    r.verdict = Verdict::holds_on_truncation;
  }
  r.witness = {indices[arg]};
  return r;
}

}  // namespace ultraweights
