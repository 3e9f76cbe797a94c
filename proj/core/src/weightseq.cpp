#include "ultraweights/weightseq.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "ultraweights/errors.hpp"
#include "ultraweights/weightfn.hpp"

namespace ultraweights {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log-domain comparisons use a tolerance relative to the magnitude involved
inline double tol(double a, double b = 0.0) { return 1e-9 * (1.0 + std::max(std::abs(a), std::abs(b))); }

ConditionReport inconclusive(std::string name, long long K, std::string note) {
  ConditionReport r;
  r.name = std::move(name);
  r.K = K;
  r.verdict = Verdict::inconclusive;
  r.note = std::move(note);
  return r;
}

}  // namespace

// --- WeightSequence -------------------------------------------------------

WeightSequence::WeightSequence(std::vector<double> logM, std::string label)
    : logM_(std::move(logM)), label_(std::move(label)) {
  // 0 <= ln M_1 = ln mu_1 <= ln mu_2 <= ...
  double prev = 0.0;
  for (int k = 1; k <= K(); ++k) {
    const double mu = logM_[k] - logM_[k - 1];
    if (mu < prev - tol(mu, prev)) {
      axiom_witness_ = k;
      break;
    }
    prev = mu;
  }
  is_weight_sequence_ = !axiom_witness_.has_value();
  if (is_weight_sequence_) {
    for (int k = 2; k <= K(); ++k)
      if (log_m(k) < log_m(k - 1) - tol(log_m(k)))
        throw NumericalError("m_k decreases at k=" + std::to_string(k) +
                             " although mu_k is nondecreasing (" + label_ + ")");
  }
}

WeightSequence WeightSequence::from_log_table(std::vector<double> logM, std::string label) {
  if (logM.size() < static_cast<std::size_t>(kMinTruncation) + 1)
    throw InputError("sequence table needs at least " + std::to_string(kMinTruncation + 1) +
                     " entries, got " + std::to_string(logM.size()));
  for (std::size_t j = 0; j < logM.size(); ++j)
    if (!std::isfinite(logM[j]))
      throw InputError("non-finite log entry at index " + std::to_string(j));
  if (std::abs(logM[0]) > 1e-12)
    throw InputError("M_0 must be 1 (log entry 0 is " + shortest(logM[0]) + ")");
  logM[0] = 0.0;
  return WeightSequence(std::move(logM), std::move(label));
}

WeightSequence WeightSequence::from_values(std::span<const double> M, std::string label) {
  std::vector<double> logM(M.size());
  for (std::size_t j = 0; j < M.size(); ++j) {
    if (!(M[j] > 0.0) || !std::isfinite(M[j]))
      throw InputError("sequence entry at index " + std::to_string(j) + " must be positive and finite");
    logM[j] = std::log(M[j]);
  }
  return from_log_table(std::move(logM), std::move(label));
}

WeightSequence WeightSequence::gevrey(double s, int K) {
  if (!(s > 0.0)) throw InputError("gevrey exponent must be positive");
  if (K < kMinTruncation) throw InputError("truncation K must be >= " + std::to_string(kMinTruncation));
  std::vector<double> logM(static_cast<std::size_t>(K) + 1, 0.0);
  for (int j = 2; j <= K; ++j) logM[j] = s * j * std::log(static_cast<double>(j));
  return WeightSequence(std::move(logM), "gevrey(s=" + shortest(s) + ")");
}

WeightSequence WeightSequence::factorial_power(double s, int K) {
  if (!(s > 0.0)) throw InputError("factorial exponent must be positive");
  if (K < kMinTruncation) throw InputError("truncation K must be >= " + std::to_string(kMinTruncation));
  std::vector<double> logM(static_cast<std::size_t>(K) + 1, 0.0);
  for (int j = 2; j <= K; ++j) logM[j] = s * std::lgamma(j + 1.0);
  return WeightSequence(std::move(logM), "factorial_power(s=" + shortest(s) + ")");
}

double WeightSequence::log_m(int j) const {
  if (j == 0) j = 1;
  return logM_.at(static_cast<std::size_t>(j)) / j;
}

double WeightSequence::log_mu(int k) const {
  if (k == 0) return 0.0;
  return logM_.at(static_cast<std::size_t>(k)) - logM_[static_cast<std::size_t>(k) - 1];
}

WeightSequence WeightSequence::scaled(double t) const {
  if (!(t > 0.0)) throw InputError("scale must be positive");
  const double lt = std::log(t);
  std::vector<double> out(logM_);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += static_cast<double>(k) * lt;
  return WeightSequence(std::move(out), label_ + "*" + shortest(t) + "^k");
}

WeightSequence WeightSequence::truncated(int K) const {
  if (K < kMinTruncation || K > this->K())
    throw InputError("cannot truncate " + label_ + " to K=" + std::to_string(K));
  return WeightSequence(std::vector<double>(logM_.begin(), logM_.begin() + K + 1), label_);
}

// --- BaseSequence ---------------------------------------------------------

BaseSequence::BaseSequence(std::vector<long long> k) : k_(std::move(k)) {
  if (k_.empty() || k_[0] != 0) throw InputError("base sequence must start with k_0 = 0");
  for (std::size_t j = 1; j < k_.size(); ++j)
    if (k_[j] <= k_[j - 1])
      throw InputError("base sequence not strictly increasing at j=" + std::to_string(j));
}

BaseSequence BaseSequence::linear(long long step, long long max_order) {
  if (step < 1) throw InputError("linear base step must be >= 1");
  std::vector<long long> k{0};
  for (long long v = step; v <= max_order; v += step) k.push_back(v);
  return BaseSequence(std::move(k));
}

BaseSequence BaseSequence::geometric(long long b, long long max_order) {
  if (b < 2) throw InputError("geometric base must be >= 2");
  std::vector<long long> k{0};
  for (long long v = 1; v <= max_order; v *= b) {
    k.push_back(v);
    if (v > max_order / b) break;
  }
  return BaseSequence(std::move(k));
}

BaseSequence BaseSequence::double_exponential(long long max_order) {
  std::vector<long long> k{0};
  for (int j = 1; j <= 5; ++j) {
    const long long v = 1LL << (1 << j);
    if (v > max_order) break;
    k.push_back(v);
  }
  return BaseSequence(std::move(k));
}

std::size_t BaseSequence::bracket(long long ell) const {
  if (ell < 0 || ell >= last())
    throw InputError("order " + std::to_string(ell) + " is not bracketed by the base sequence");
  auto it = std::upper_bound(k_.begin(), k_.end(), ell);
  return static_cast<std::size_t>(it - k_.begin()) - 1;
}

bool BaseSequence::contains(long long ell) const {
  return std::binary_search(k_.begin(), k_.end(), ell);
}

// --- builders -------------------------------------------------------------

WeightSequence build_sequence(const SequenceSpec& spec) {
  using K = SequenceSpec::Kind;
  switch (spec.kind) {
    case K::gevrey:
      return WeightSequence::gevrey(spec.s, spec.K);
    case K::factorial_power:
      return WeightSequence::factorial_power(spec.s, spec.K);
    case K::table: {
      const std::string label = spec.label.empty() ? "table" : spec.label;
      if (spec.table_is_log) return WeightSequence::from_log_table(spec.table, label);
      return WeightSequence::from_values(spec.table, label);
    }
    case K::from_omega: {
      if (spec.K < kMinTruncation) throw InputError("truncation K must be >= " + std::to_string(kMinTruncation));
      WeightFunction w(spec.omega);
      return associated_sequence(w, spec.rho, spec.K).to_weight_sequence();
    }
  }
  throw InputError("unknown sequence kind");
}

BaseSequence build_base(const BaseSpec& spec) {
  using K = BaseSpec::Kind;
  switch (spec.kind) {
    case K::list: return BaseSequence(spec.list);
    case K::linear: return BaseSequence::linear(spec.step, spec.max_order);
    case K::geometric: return BaseSequence::geometric(spec.step, spec.max_order);
    case K::double_exponential: return BaseSequence::double_exponential(spec.max_order);
  }
  throw InputError("unknown base sequence kind");
}

SequenceProfile sequence_profile(const WeightSequence& M) {
  SequenceProfile p;
  const int K = M.K();
  p.log_mu.resize(static_cast<std::size_t>(K) + 1);
  p.log_m.resize(static_cast<std::size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) {
    p.log_mu[k] = M.log_mu(k);
    p.log_m[k] = M.log_m(k);
  }
  return p;
}

// --- growth ---------------------------------------------------------------

GrowthIndices growth_indices(const WeightSequence& M, const TrendThresholds& th) {
  const int K = M.K();
  if (K < 2) throw InputError("growth indices need K >= 2");
  auto lm = M.log_M();

  std::vector<double> dc(static_cast<std::size_t>(K));
  std::vector<long long> dc_idx(static_cast<std::size_t>(K));
  for (int k = 0; k < K; ++k) {
    dc[k] = (lm[k + 1] - lm[k]) / (k + 1);
    dc_idx[k] = k;
  }

  // profile over N = j + k; each entry is the max over the split j + k = N
  std::vector<double> mg;
  std::vector<long long> mg_idx;
  std::vector<std::pair<long long, long long>> split;
  for (int N = 2; N <= K; ++N) {
    double best = kNegInf;
    int bj = 1;
    for (int j = 1; j <= N / 2; ++j) {
      const double v = (lm[N] - lm[j] - lm[N - j]) / N;
      if (v > best) best = v, bj = j;
    }
    mg.push_back(best);
    mg_idx.push_back(N);
    split.emplace_back(bj, N - bj);
  }

  GrowthIndices g{bounded_report("dc", dc, dc_idx, K, th), bounded_report("mg", mg, mg_idx, K, th)};
  const auto N = g.mg.witness.front();
  const auto& [j, k] = split[static_cast<std::size_t>(N - 2)];
  g.mg.witness = {j, k};
  return g;
}

ConditionReport base_sequence_check(const BaseSequence& k, const TrendThresholds& th) {
  if (k.size() < 3) return inconclusive("special_base", k.last(), "fewer than 3 base indices");
  std::vector<double> lr;
  std::vector<long long> idx;
  for (std::size_t j = 1; j + 1 < k.size(); ++j) {
    lr.push_back(std::log(static_cast<double>(k[j + 1])) - std::log(static_cast<double>(k[j])));
    idx.push_back(static_cast<long long>(j));
  }
  return bounded_report("special_base", lr, idx, k.last(), th);
}

ConditionReport lacunary_ratio(const WeightSequence& M, const BaseSequence& k, const WeightSequence* Mprime,
                               const TrendThresholds& th) {
  const WeightSequence& Mp = Mprime ? *Mprime : M;
  const long long need = k.last();
  if (need > M.K() || need > Mp.K())
    throw InputError("base sequence reaches order " + std::to_string(need) + "; sequences need K >= " +
                     std::to_string(need));
  if (k.size() < 2) return inconclusive("lacunary_ratio", std::min(M.K(), Mp.K()), "base sequence has no k_1");

  std::vector<double> lr;
  std::vector<long long> idx;
  for (std::size_t j = 1; j + 1 < k.size(); ++j) {
    lr.push_back(M.log_m(static_cast<int>(k[j + 1])) - Mp.log_m(static_cast<int>(k[j])));
    idx.push_back(static_cast<long long>(j));
  }
  ConditionReport r;
  if (lr.empty()) {
    r = inconclusive("lacunary_ratio", std::min(M.K(), Mp.K()), "only one bracket");
  } else {
    r = bounded_report("lacunary_ratio", lr, idx, std::min(M.K(), Mp.K()), th);
  }
  // k_0 = 0 is read with the m_0 := m_1 convention
  r.details.emplace_back("j0_ratio", std::exp(M.log_m(static_cast<int>(k[1])) - Mp.log_m(1)));
  return r;
}

ConditionReport analytic_inclusion_index(const WeightSequence& M, const TrendThresholds& th) {
  std::vector<double> lr;
  std::vector<long long> idx;
  for (int j = 1; j <= M.K(); ++j) {
    lr.push_back(std::log(static_cast<double>(j)) - M.log_m(j));
    idx.push_back(j);
  }
  return bounded_report("j_over_m", lr, idx, M.K(), th);
}

std::vector<ConditionReport> liess_report(const WeightSequence& M, int n_probe, const TrendThresholds& th) {
  const int K = M.K();
  if (n_probe < 2 || n_probe > K / 4)
    throw InputError("n_probe must lie in [2, K/4] = [2, " + std::to_string(K / 4) + "], got " +
                     std::to_string(n_probe));
  std::vector<ConditionReport> out;

  // (a) m nondecreasing and j/m_j bounded
  {
    ConditionReport r = analytic_inclusion_index(M, th);
    r.name = "liess_a";
    for (int j = 2; j <= K; ++j) {
      if (M.log_m(j) < M.log_m(j - 1) - tol(M.log_m(j))) {
        r.verdict = Verdict::fails;
        r.witness = {j};
        r.note = "m_j decreases";
        break;
      }
    }
    out.push_back(std::move(r));
  }

  // (b) m_{j+1}/m_j
  {
    std::vector<double> lr;
    std::vector<long long> idx;
    for (int j = 1; j < K; ++j) {
      lr.push_back(M.log_m(j + 1) - M.log_m(j));
      idx.push_back(j);
    }
    out.push_back(bounded_report("liess_b", lr, idx, K, th));
  }

  // (c) g(k) = max_j m_{kj}/m_j for k <= n_probe
  {
    ConditionReport r;
    r.name = "liess_c";
    r.K = K;
    r.note = "truncation-level evidence";
    r.verdict = Verdict::holds_on_truncation;
    r.log_index_value = kNegInf;
    for (int k = 2; k <= n_probe; ++k) {
      std::vector<double> lr;
      std::vector<long long> idx;
      for (int j = 1; k * j <= K; ++j) {
        lr.push_back(M.log_m(k * j) - M.log_m(j));
        idx.push_back(j);
      }
      const ConditionReport rk = bounded_report("g", lr, idx, K, th);
      r.details.emplace_back("g(" + std::to_string(k) + ")", rk.index_value);
      if (rk.log_index_value > r.log_index_value) {
        r.log_index_value = rk.log_index_value;
        r.index_value = rk.index_value;
        r.witness = {k, rk.witness.front()};
        r.trend = rk.trend;
      }
      if (rk.verdict == Verdict::fails && r.verdict != Verdict::fails) {
        r.verdict = Verdict::fails;
        r.witness = {k, rk.witness.front()};
        r.trend = rk.trend;
      }
    }
    out.push_back(std::move(r));
  }

  // (d) liminf_k m_{nk}/m_k > 1 for some n, the liminf read off the tail third
  {
    ConditionReport r;
    r.name = "liess_d";
    r.K = K;
    r.note = "truncation-level evidence; liminf estimated by the min over the last third";
    r.verdict = Verdict::fails;
    r.log_index_value = kNegInf;
    long long worst_k = 1;
    for (int n = 2; n <= n_probe; ++n) {
      const int kmax = K / n;
      double mn = std::numeric_limits<double>::infinity();
      int arg = kmax;
      for (int k = std::max(1, (2 * kmax) / 3); k <= kmax; ++k) {
        const double v = M.log_m(n * k) - M.log_m(k);
        if (v < mn) mn = v, arg = k;
      }
      r.details.emplace_back("a(" + std::to_string(n) + ")", std::exp(mn));
      if (mn > r.log_index_value) {
        r.log_index_value = mn;
        r.index_value = std::exp(mn);
        worst_k = arg;
        r.witness = {n, arg};
      }
      if (mn > 1e-9) {
        r.verdict = Verdict::holds_on_truncation;
        r.log_index_value = mn;
        r.index_value = std::exp(mn);
        r.witness = {n, arg};
        break;
      }
    }
    if (r.verdict == Verdict::fails && r.witness.empty()) r.witness = {n_probe, worst_k};
    out.push_back(std::move(r));
  }
  return out;
}

AlbanoReport albano_check(const WeightSequence& M, const TrendThresholds& th) {
  const int K = M.K();
  std::vector<double> lm(static_cast<std::size_t>(K) + 2);
  for (int j = 1; j <= K; ++j) lm[j] = M.log_m(j);
  // suffix minimum and its position, for the worst admissible k >= floor(j/i) + 1
  std::vector<double> smin(static_cast<std::size_t>(K) + 2, std::numeric_limits<double>::infinity());
  std::vector<int> sarg(static_cast<std::size_t>(K) + 2, K);
  for (int k = K; k >= 1; --k) {
    smin[k] = smin[k + 1];
    sarg[k] = sarg[k + 1];
    if (lm[k] <= smin[k]) smin[k] = lm[k], sarg[k] = k;
  }

  AlbanoReport a;
  int i0 = 0;
  std::vector<long long> first_violation;
  std::vector<double> c_prof;
  std::vector<long long> c_idx;
  std::vector<std::array<long long, 3>> c_wit;
  for (int j = 2; j <= K; ++j) {
    double best = kNegInf;
    std::array<long long, 3> w{0, j, 0};
    for (int i = 1; i < j; ++i) {
      const int kmin = j / i + 1;
      if (kmin > K) continue;
      const double v = lm[j] - lm[i] - smin[kmin];
      if (v > best) best = v, w = {i, j, sarg[kmin]};
      if (v > tol(lm[j]) && i > i0) {
        i0 = i;
        first_violation = {i, j, sarg[kmin]};
      }
    }
    if (best > kNegInf) {
      c_prof.push_back(best);
      c_idx.push_back(j);
      c_wit.push_back(w);
    }
  }

  a.i0 = i0;
  a.albano.name = "albano";
  a.albano.K = K;
  a.albano.index_value = i0;
  a.albano.log_index_value = i0 > 0 ? std::log(static_cast<double>(i0)) : kNegInf;
  a.albano.note = "truncation-level evidence; smallest i0 on the truncation";
  if (i0 == 0) {
    a.albano.verdict = Verdict::holds_on_truncation;
  } else if (3 * i0 >= 2 * K) {
    a.albano.verdict = Verdict::fails;
    a.albano.witness = first_violation;
  } else {
    a.albano.verdict = Verdict::holds_on_truncation;
    a.albano.witness = first_violation;
  }

  a.albano2 = bounded_report("albano2", c_prof, c_idx, K, th);
  if (!c_prof.empty()) {
    const auto pos = static_cast<std::size_t>(
        std::find(c_idx.begin(), c_idx.end(), a.albano2.witness.front()) - c_idx.begin());
    a.albano2.witness = {c_wit[pos][0], c_wit[pos][1], c_wit[pos][2]};
  }
  a.C = std::max(1.0, a.albano2.index_value);
  a.albano2.details.emplace_back("C", a.C);

  std::vector<double> sp;
  std::vector<long long> sp_idx;
  for (int i = 1; 2 * i <= K; ++i) {
    sp.push_back(lm[2 * i] - lm[i] - lm[3]);
    sp_idx.push_back(i);
  }
  a.mg_special = bounded_report("albano2_k3_j2i", sp, sp_idx, K, th);

  const auto g = growth_indices(M, th);
  a.consistent_with_growth = !(a.mg_special.verdict == Verdict::holds_on_truncation && g.mg.failed());
  return a;
}

}  // namespace ultraweights
