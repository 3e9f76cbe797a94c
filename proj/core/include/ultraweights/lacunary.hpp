#pragma once

// Bound propagation from derivative estimates at lacunary orders k_j to
// certified estimates at every order, with the constants tracked.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ultraweights/report.hpp"
#include "ultraweights/weightfn.hpp"
#include "ultraweights/weightseq.hpp"

namespace ultraweights {

struct LacunaryInput {
  BaseSequence k{std::vector<long long>{0}};
  WeightSequence M = WeightSequence::gevrey(1.0, kMinTruncation);
  std::optional<WeightSequence> Mprime;  // defaults to M
  double C = 1.0;
  double rho = 1.0;
  int n = 1;
  /// Optional measured bounds ln b_j at the base orders. When present they
  /// replace C (rho m_{k_j})^{k_j}, and C is raised to cover them.
  std::vector<double> log_bounds;

  const WeightSequence& mprime() const noexcept { return Mprime ? *Mprime : M; }
};

enum class Regime { global, local, moment, interval_cg };
const char* to_string(Regime r) noexcept;

struct ChainStep {
  long long ell = 0;
  long long j = 0;  // bracket index, k_j <= ell < k_{j+1}
  long long k_lo = 0;
  long long k_hi = 0;
  std::string rule;
};

struct BoundCertificate {
  Regime regime = Regime::global;
  int L = 0;
  std::vector<double> B;  // ln B_ell, ell = 0..L
  double C_out = 1.0;
  double rho_out = 1.0;   // sigma_out for the moment chain
  std::vector<ChainStep> chain_trace;
  std::vector<std::pair<std::string, double>> constants;  // C2, G, A, ... as used

  double constant(const std::string& name) const;
};

/// L defaults to k_last. Orders past k_last have no bracketing pair and are refused.
BoundCertificate propagate_global(const LacunaryInput& in, std::optional<int> L = {});
BoundCertificate propagate_local(const LacunaryInput& in, std::optional<int> L, double C_geom, bool beurling);
BoundCertificate propagate_moment(const LacunaryInput& in, std::optional<int> L, double sigma);
BoundCertificate propagate_interval_cg(const LacunaryInput& in, std::optional<int> L, double interval_len,
                                       bool beurling, std::optional<double> sigma_target = {});

/// Largest ell with B_ell > ln C_out + ell ln(rho_out m'_ell) beyond 1e-12, or nullopt.
std::optional<int> soundness_violation(const BoundCertificate& c, const WeightSequence& Mprime);

/// ln P_ell with P_ell = (1/ell!) sum_k binom(ell, k) k^ell, the polarization factor.
double log_polarization_factor(int ell);

/// n^{(3k-2)/2} for k >= 2, n for k = 1, 1 for k = 0.
double moment_factor(int n, int k);

enum class Setting { B_Lp, D, E_Lp_roumieu, E_Lp_beurling, S, B_Linfty_interval };
const char* to_string(Setting s) noexcept;
Setting parse_setting(const std::string& s);

struct VerdictOptions {
  bool beurling = false;                  // B_Linfty_interval only
  std::optional<BaseSequence> ell;        // second base sequence for S, defaults to k
  double rho = 1.0;                       // member of the omega family that is examined
  int K = 256;                            // truncation for omega families
  TrendThresholds th;
};

struct VerdictReport {
  std::string setting;
  std::string verdict;  // theorem-applies, hypothesis-fails or inconclusive
  std::vector<ConditionReport> checklist;
  std::string failed_check;
  std::vector<long long> witness;
  long long K = 0;
  std::string note;

  bool applies() const noexcept { return verdict == "theorem-applies"; }
  bool failed() const noexcept { return verdict == "hypothesis-fails"; }
};

VerdictReport equality_verdict(const WeightSequence& M, const BaseSequence& k, Setting s,
                               const VerdictOptions& opt = {});
VerdictReport equality_verdict(const WeightFunction& w, const BaseSequence& k, Setting s,
                               const VerdictOptions& opt = {});

}  // namespace ultraweights
