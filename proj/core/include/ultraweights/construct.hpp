#pragma once

// Counterexample sequences (N, k_j, l_j) for a totally ordered family
// M^(s): N follows M^(1/j) / j^k at k_j and is inflated by 2^(2^l) M^(j) at
// l_j. Indices grow doubly exponentially, so they are kept as decimal
// strings and all logarithms are base 2 at high precision.

#include <string>
#include <vector>

#include "ultraweights/report.hpp"
#include "ultraweights/specs.hpp"

namespace ultraweights {

/// Total order and divergence evidence for the family on a small grid.
/// Throws InputError when either fails.
ConditionReport check_family(const FamilySpec& fam);

/// log2 M^(s)_k for a decimal index k.
std::string family_log2(const FamilySpec& fam, double s, const std::string& k);

struct ConstructOptions {
  int index_ceiling_bits = 128;   // candidates must stay below 2^bits
  int exact_power_bits = 20;      // A_l = 2^(2^l) needs l < 2^bits for an exact log2
  long long linear_scan = 1 << 12;
};

struct CounterexampleWitness {
  int jmax = 0;
  FamilySpec family;
  std::vector<std::string> ell;       // l_1 .. l_jmax
  std::vector<std::string> k;         // k_1 .. k_jmax
  std::vector<std::string> logN2_ell; // log2 N at l_j
  std::vector<std::string> logN2_k;   // log2 N at k_j
  std::vector<std::string> logNu2_ell; // plateau log2 nu on (k_{j-1}, l_j]
  std::vector<std::string> logNu2_k;   // plateau log2 nu on (l_j, k_j]
};

CounterexampleWitness build_counterexample(const FamilySpec& fam, int jmax, const ConstructOptions& opt = {});

/// Interlacing, the defining values at k_j and l_j (1e-9 absolute in log2),
/// consistency of N with its plateaus, nu nondecreasing with nu_1 >= 1.
/// details carry log2(n_{l_j} / m^(j)_{l_j}) = 2^l_j / l_j per j; trend is
/// the trend of that ratio.
ConditionReport verify_counterexample(const CounterexampleWitness& w);

/// Decrementing any chosen index breaks the inequality that selected it.
ConditionReport minimality_check(const CounterexampleWitness& w);

}  // namespace ultraweights
