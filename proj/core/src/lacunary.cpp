#include "ultraweights/lacunary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ultraweights/errors.hpp"

namespace ultraweights {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kE = 2.718281828459045;

double log_sum(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// Shared preparation: validated input, per-index input bounds, and C2.
struct Prepared {
  const LacunaryInput* in;
  int L;
  std::vector<double> lb;  // ln input bound at k_j
  double logC;             // ln C, raised to cover explicit bounds
  double C2;
  ConditionReport ratio;
};

Prepared prepare(const LacunaryInput& in, std::optional<int> L, double rate) {
  if (!(in.C > 0.0) || !(rate > 0.0) || in.n < 1) throw InputError("need C > 0, rho > 0 and n >= 1");
  const auto& k = in.k;
  const WeightSequence& M = in.M;
  const WeightSequence& Mp = in.mprime();
  if (k.size() < 2) throw InputError("base sequence needs at least k_0 and k_1");
  const long long need = k.last();
  if (need > M.K() || need > Mp.K())
    throw InputError("base sequence reaches order " + std::to_string(need) + "; sequences need K >= " +
                     std::to_string(need));
  const int Lv = L.value_or(static_cast<int>(need));
  if (Lv < 0) throw InputError("L must be >= 0");
  if (Lv > need)
    throw InputError("L=" + std::to_string(Lv) + " lies past the last base index " + std::to_string(need) +
                     "; no bracketing pair exists there");
  for (int j = 1; j <= need; ++j) {
    if (M.log_m(j) > Mp.log_m(j) + 1e-12 * (1.0 + std::abs(Mp.log_m(j))))
      throw HypothesisError("m_j > m'_j at j=" + std::to_string(j), {j});
    if (j >= 2 && (M.log_m(j) < M.log_m(j - 1) - 1e-12 * (1.0 + std::abs(M.log_m(j))) ||
                   Mp.log_m(j) < Mp.log_m(j - 1) - 1e-12 * (1.0 + std::abs(Mp.log_m(j)))))
      throw HypothesisError("m or m' decreases at j=" + std::to_string(j), {j});
  }

  Prepared p{&in, Lv, {}, std::log(in.C), 1.0, {}};
  p.ratio = lacunary_ratio(M, k, &Mp);
  if (p.ratio.failed())
    throw HypothesisError("lacunary ratio m_{k_{j+1}}/m'_{k_j} grows on the truncation; witness j=" +
                              std::to_string(p.ratio.witness.front()),
                          p.ratio.witness);
  double j0 = 1.0;
  for (const auto& [name, v] : p.ratio.details)
    if (name == "j0_ratio") j0 = v;
  p.C2 = std::max({1.0, j0, p.ratio.verdict == Verdict::inconclusive ? 1.0 : p.ratio.index_value});

  const double lr = std::log(rate);
  p.lb.resize(k.size());
  if (!in.log_bounds.empty()) {
    if (in.log_bounds.size() != k.size())
      throw InputError("log_bounds needs one entry per base index (" + std::to_string(k.size()) + ")");
    for (std::size_t j = 0; j < k.size(); ++j) {
      const double kj = static_cast<double>(k[j]);
      p.lb[j] = in.log_bounds[j];
      if (!std::isfinite(p.lb[j])) throw InputError("log_bounds entry " + std::to_string(j) + " is not finite");
      p.logC = std::max(p.logC, p.lb[j] - kj * (lr + M.log_m(static_cast<int>(k[j]))));
    }
  } else {
    for (std::size_t j = 0; j < k.size(); ++j) {
      const double kj = static_cast<double>(k[j]);
      p.lb[j] = p.logC + (k[j] == 0 ? 0.0 : kj * (lr + M.log_m(static_cast<int>(k[j]))));
    }
  }
  return p;
}

double claim(double logC, double log_rate, const WeightSequence& Mp, int ell) {
  return logC + (ell == 0 ? 0.0 : ell * (log_rate + Mp.log_m(ell)));
}

// Raise C_out to cover orders the analytic constants do not reach.
void fold(BoundCertificate& c, const WeightSequence& Mp, int below) {
  double lc = std::log(c.C_out);
  const double lr = std::log(c.rho_out);
  for (int ell = 0; ell < std::min(below, c.L + 1); ++ell)
    lc = std::max(lc, c.B[static_cast<std::size_t>(ell)] - claim(0.0, lr, Mp, ell));
  c.C_out = std::exp(lc);
}

void assert_sound(const BoundCertificate& c, const WeightSequence& Mp) {
  if (auto v = soundness_violation(c, Mp))
    throw NumericalError(std::string("certificate not sound at ell=") + std::to_string(*v) + " (" +
                         to_string(c.regime) + ")");
}

void require_special(const BaseSequence& k) {
  const ConditionReport r = base_sequence_check(k);
  if (r.verdict != Verdict::holds_on_truncation)
    throw HypothesisError("base sequence is not special on the truncation (k_{j+1}/k_j " +
                              std::string(r.trend ? to_string(*r.trend) : "undetermined") + ")",
                          r.witness);
}

void require_analytic(const WeightSequence& M, bool vanishing) {
  const ConditionReport r = analytic_inclusion_index(M);
  if (r.failed() || !r.trend)
    throw HypothesisError("j/m_j is not bounded on the truncation", r.witness);
  if (vanishing && *r.trend != Trend::vanishing)
    throw HypothesisError(std::string("j/m_j does not tend to 0 on the truncation (trend ") + to_string(*r.trend) + ")",
                          r.witness);
}

// max_{j>=1} k_{j+1}/m_{k_{j+1}}, and from which j on the tail stays <= tau
double tail_A(const LacunaryInput& in, std::size_t from) {
  double A = 0.0;
  for (std::size_t j = std::max<std::size_t>(from, 1); j + 1 < in.k.size(); ++j) {
    const int kk = static_cast<int>(in.k[j + 1]);
    A = std::max(A, std::exp(std::log(static_cast<double>(kk)) - in.M.log_m(kk)));
  }
  return A;
}

std::size_t split_index(const LacunaryInput& in, double tau) {
  std::size_t jt = in.k.size() - 1;
  for (std::size_t j = in.k.size() - 1; j-- > 1;) {
    const int kk = static_cast<int>(in.k[j + 1]);
    if (std::exp(std::log(static_cast<double>(kk)) - in.M.log_m(kk)) > tau) break;
    jt = j;
  }
  return jt;
}

BoundCertificate start(Regime r, const Prepared& p) {
  BoundCertificate c;
  c.regime = r;
  c.L = p.L;
  c.B.assign(static_cast<std::size_t>(p.L) + 1, 0.0);
  c.chain_trace.reserve(c.B.size());
  c.constants.emplace_back("C2", p.C2);
  c.constants.emplace_back("C_in", std::exp(p.logC));
  return c;
}

ChainStep step(const BaseSequence& k, int ell, std::size_t j, std::string rule) {
  return {ell, static_cast<long long>(j), k[j], j + 1 < k.size() ? k[j + 1] : k[j], std::move(rule)};
}

}  // namespace

const char* to_string(Regime r) noexcept {
  switch (r) {
    case Regime::global: return "global";
    case Regime::local: return "local";
    case Regime::moment: return "moment";
    case Regime::interval_cg: return "interval_cg";
  }
  return "?";
}

double BoundCertificate::constant(const std::string& name) const {
  for (const auto& [n, v] : constants)
    if (n == name) return v;
  throw InputError("certificate has no constant " + name);
}

double log_polarization_factor(int ell) {
  if (ell <= 0) return 0.0;
  double s = kNegInf;
  for (int k = 1; k <= ell; ++k) {
    const double lb = std::lgamma(ell + 1.0) - std::lgamma(k + 1.0) - std::lgamma(ell - k + 1.0);
    s = log_sum(s, lb + ell * std::log(static_cast<double>(k)));
  }
  return s - std::lgamma(ell + 1.0);
}

double moment_factor(int n, int k) {
  if (k <= 0) return 1.0;
  if (k == 1) return n;
  return std::pow(static_cast<double>(n), (3.0 * k - 2.0) / 2.0);
}

std::optional<int> soundness_violation(const BoundCertificate& c, const WeightSequence& Mp) {
  const double lc = std::log(c.C_out);
  const double lr = std::log(c.rho_out);
  for (int ell = c.L; ell >= 0; --ell) {
    const double rhs = claim(lc, lr, Mp, ell);
    if (c.B[static_cast<std::size_t>(ell)] > rhs + 1e-12 * (1.0 + std::abs(rhs))) return ell;
  }
  return std::nullopt;
}

// --- engines --------------------------------------------------------------

BoundCertificate propagate_global(const LacunaryInput& in, std::optional<int> L) {
  const Prepared p = prepare(in, L, in.rho);
  const auto& k = in.k;
  const double ln_n = std::log(static_cast<double>(in.n));
  std::vector<double> d(k.size());  // directional bounds C (n rho m_{k_j})^{k_j}
  for (std::size_t j = 0; j < k.size(); ++j) d[j] = p.lb[j] + static_cast<double>(k[j]) * ln_n;

  BoundCertificate c = start(Regime::global, p);
  for (int ell = 0; ell <= p.L; ++ell) {
    if (k.contains(ell)) {
      const std::size_t j = static_cast<std::size_t>(std::lower_bound(k.k().begin(), k.k().end(), ell) - k.k().begin());
      c.B[ell] = p.lb[j];
      c.chain_trace.push_back(step(k, ell, j, "input"));
      continue;
    }
    const std::size_t j = k.bracket(ell);
    const double th = static_cast<double>(ell - k[j]) / static_cast<double>(k[j + 1] - k[j]);
    double b = std::log(2.0) + (1.0 - th) * d[j] + th * d[j + 1];
    std::string rule = "landau_kolmogorov";
    if (in.n > 1) {
      b += log_polarization_factor(ell);
      rule += "+polarization";
    }
    c.B[ell] = b;
    c.chain_trace.push_back(step(k, ell, j, rule));
  }
  c.C_out = 2.0 * std::exp(p.logC);
  c.rho_out = 2.0 * kE * p.C2 * in.n * in.rho;
  c.constants.emplace_back("C1", std::exp(p.logC));
  c.constants.emplace_back("rho1", in.n * in.rho);
  assert_sound(c, in.mprime());
  return c;
}

BoundCertificate propagate_local(const LacunaryInput& in, std::optional<int> L, double C_geom, bool beurling) {
  if (!(C_geom > 0.0)) throw InputError("C_geom must be positive");
  require_special(in.k);
  require_analytic(in.M, beurling);
  const Prepared p = prepare(in, L, in.rho);
  const auto& k = in.k;
  const double ln_n = std::log(static_cast<double>(in.n));
  const double lcg = std::log(C_geom);
  std::vector<double> d(k.size());
  for (std::size_t j = 0; j < k.size(); ++j) d[j] = p.lb[j] + static_cast<double>(k[j]) * ln_n;

  double logG = 0.0;
  for (std::size_t j = 1; j + 1 < k.size(); ++j)
    logG = std::max(logG, static_cast<double>(k[j + 1] - k[j]) / static_cast<double>(k[j]) * lcg);
  const double rho1 = in.n * in.rho;

  BoundCertificate c = start(Regime::local, p);
  for (int ell = 0; ell <= p.L; ++ell) {
    if (k.contains(ell)) {
      const std::size_t j = static_cast<std::size_t>(std::lower_bound(k.k().begin(), k.k().end(), ell) - k.k().begin());
      c.B[ell] = p.lb[j];
      c.chain_trace.push_back(step(k, ell, j, "input"));
      continue;
    }
    const std::size_t j = k.bracket(ell);
    const long long mm = k[j + 1] - k[j];
    const long long jj = ell - k[j];
    const double th = static_cast<double>(jj) / static_cast<double>(mm);
    const double first = (1.0 - th) * d[j] + th * d[j + 1];
    const double second = static_cast<double>(jj) * std::log(static_cast<double>(mm)) + d[j];
    double b = static_cast<double>(mm) * lcg + log_sum(first, second);
    std::string rule = "mixed_interpolation";
    if (in.n > 1) {
      b += log_polarization_factor(ell);
      rule += "+polarization";
    }
    c.B[ell] = b;
    c.chain_trace.push_back(step(k, ell, j, rule));
  }

  c.C_out = 2.0 * std::exp(p.logC);
  c.constants.emplace_back("G", std::exp(logG));
  int fold_below = static_cast<int>(k[1]);
  if (beurling) {
    // past j_tau the additive term is absorbed by rho1 itself
    const std::size_t jt = split_index(in, rho1);
    c.rho_out = 2.0 * kE * std::exp(logG) * p.C2 * rho1;
    fold_below = std::max(fold_below, static_cast<int>(k[jt]));
    c.constants.emplace_back("j_tau", static_cast<double>(jt));
    c.constants.emplace_back("k_j_tau", static_cast<double>(k[jt]));
  } else {
    const double A = tail_A(in, 1);
    c.rho_out = 2.0 * kE * std::exp(logG) * std::max(p.C2 * rho1, A * p.C2);
    c.constants.emplace_back("A", A);
  }
  fold(c, in.mprime(), fold_below);
  assert_sound(c, in.mprime());
  return c;
}

BoundCertificate propagate_moment(const LacunaryInput& in, std::optional<int> L, double sigma) {
  const Prepared p = prepare(in, L, sigma);
  const auto& k = in.k;
  std::vector<double> w(k.size());  // bounds on |x|^{k_j} |f(x)|
  for (std::size_t j = 0; j < k.size(); ++j) w[j] = p.lb[j] + std::log(moment_factor(in.n, static_cast<int>(k[j])));

  BoundCertificate c = start(Regime::moment, p);
  for (int ell = 0; ell <= p.L; ++ell) {
    if (k.contains(ell)) {
      const std::size_t j = static_cast<std::size_t>(std::lower_bound(k.k().begin(), k.k().end(), ell) - k.k().begin());
      c.B[ell] = p.lb[j];
      c.chain_trace.push_back(step(k, ell, j, "input"));
      continue;
    }
    const std::size_t j = k.bracket(ell);
    const double th = static_cast<double>(ell - k[j]) / static_cast<double>(k[j + 1] - k[j]);
    c.B[ell] = (1.0 - th) * w[j] + th * w[j + 1];
    c.chain_trace.push_back(step(k, ell, j, "norm_comparison+geometric_interpolation"));
  }
  c.C_out = std::exp(p.logC);
  c.rho_out = std::pow(static_cast<double>(in.n), 1.5) * p.C2 * sigma;
  c.constants.emplace_back("sigma_in", sigma);
  assert_sound(c, in.mprime());
  return c;
}

namespace {

BoundCertificate cg_chain(const LacunaryInput& in, std::optional<int> L, double len, bool beurling, double rho) {
  LacunaryInput at = in;
  at.rho = rho;
  const Prepared p = prepare(at, L, rho);
  const auto& k = in.k;
  const double llen = std::log(len);

  double logE = 0.0;
  for (std::size_t j = 1; j + 1 < k.size(); ++j)
    logE = std::max(logE, static_cast<double>(k[j + 1] - k[j]) / static_cast<double>(k[j]));

  BoundCertificate c = start(Regime::interval_cg, p);
  for (int ell = 0; ell <= p.L; ++ell) {
    if (k.contains(ell)) {
      const std::size_t j = static_cast<std::size_t>(std::lower_bound(k.k().begin(), k.k().end(), ell) - k.k().begin());
      c.B[ell] = p.lb[j];
      c.chain_trace.push_back(step(k, ell, j, "input"));
      continue;
    }
    const std::size_t j = k.bracket(ell);
    const long long mm = k[j + 1] - k[j];
    const long long jj = ell - k[j];
    const double th = static_cast<double>(jj) / static_cast<double>(mm);
    const double branch = std::max(p.lb[j + 1], std::lgamma(mm + 1.0) - static_cast<double>(mm) * llen + p.lb[j]);
    c.B[ell] = std::log(4.0) + 2.0 * static_cast<double>(jj) +
               static_cast<double>(jj) * std::log(static_cast<double>(mm) / static_cast<double>(jj)) +
               (1.0 - th) * p.lb[j] + th * branch;
    c.chain_trace.push_back(step(k, ell, j, "cartan_gorny"));
  }

  const double E = std::exp(logE);
  c.C_out = 4.0 * std::exp(p.logC);
  c.constants.emplace_back("E", E);
  int fold_below = static_cast<int>(k[1]);
  if (beurling) {
    const std::size_t jt = split_index(in, rho * len);
    c.rho_out = kE * kE * E * p.C2 * rho;
    fold_below = std::max(fold_below, static_cast<int>(k[jt]));
    c.constants.emplace_back("j_tau", static_cast<double>(jt));
    c.constants.emplace_back("k_j_tau", static_cast<double>(k[jt]));
  } else {
    const double A = tail_A(in, 1);
    c.rho_out = kE * kE * E * p.C2 * std::max(rho, A / len);
    c.constants.emplace_back("A", A);
  }
  c.constants.emplace_back("rho_in", rho);
  fold(c, in.mprime(), fold_below);
  assert_sound(c, in.mprime());
  return c;
}

}  // namespace

BoundCertificate propagate_interval_cg(const LacunaryInput& in, std::optional<int> L, double interval_len,
                                       bool beurling, std::optional<double> sigma_target) {
  if (in.n != 1) throw InputError("the interval chain is one-dimensional (n = 1)");
  if (!(interval_len > 0.0)) throw InputError("interval length must be positive");
  require_special(in.k);
  require_analytic(in.M, beurling);
  if (!beurling || !sigma_target) return cg_chain(in, L, interval_len, beurling, in.rho);

  const double sigma = *sigma_target;
  if (!(sigma > 0.0)) throw InputError("sigma_target must be positive");
  // largest rho <= in.rho whose output rate stays below sigma
  double hi = std::log(in.rho);
  double lo = hi - 50.0;
  auto rate = [&](double lr) { return cg_chain(in, L, interval_len, true, std::exp(lr)).rho_out; };
  double chosen;
  if (rate(hi) <= sigma) {
    chosen = hi;
  } else {
    const double best = rate(lo);
    if (best > sigma)
      throw HypothesisError("no rho in [" + shortest(std::exp(lo)) + ", " + shortest(in.rho) +
                            "] reaches sigma=" + shortest(sigma) + "; infimum achieved rate " + shortest(best));
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (rate(mid) <= sigma) lo = mid;
      else hi = mid;
    }
    chosen = lo;
  }
  BoundCertificate c = cg_chain(in, L, interval_len, true, std::exp(chosen));
  c.constants.emplace_back("sigma_target", sigma);
  c.constants.emplace_back("D_sigma", c.C_out);
  return c;
}

// --- verdicts -------------------------------------------------------------

const char* to_string(Setting s) noexcept {
  switch (s) {
    case Setting::B_Lp: return "B_Lp";
    case Setting::D: return "D";
    case Setting::E_Lp_roumieu: return "E_Lp_roumieu";
    case Setting::E_Lp_beurling: return "E_Lp_beurling";
    case Setting::S: return "S";
    case Setting::B_Linfty_interval: return "B_Linfty_interval";
  }
  return "?";
}

Setting parse_setting(const std::string& s) {
  for (Setting v : {Setting::B_Lp, Setting::D, Setting::E_Lp_roumieu, Setting::E_Lp_beurling, Setting::S,
                    Setting::B_Linfty_interval})
    if (s == to_string(v)) return v;
  throw InputError("unknown setting '" + s + "'");
}

namespace {

VerdictReport conclude(Setting s, std::vector<ConditionReport> checks, long long K, std::string note) {
  VerdictReport v;
  v.setting = to_string(s);
  v.K = K;
  v.note = std::move(note);
  v.verdict = "theorem-applies";
  for (const auto& c : checks) {
    if (c.failed()) {
      v.verdict = "hypothesis-fails";
      v.failed_check = c.name;
      v.witness = c.witness;
      break;
    }
  }
  if (!v.failed()) {
    for (const auto& c : checks)
      if (c.verdict == Verdict::inconclusive) {
        v.verdict = "inconclusive";
        v.failed_check = c.name;
        break;
      }
  }
  v.checklist = std::move(checks);
  return v;
}

ConditionReport weight_sequence_check(const WeightSequence& M) {
  ConditionReport r;
  r.name = "weight_sequence";
  r.K = M.K();
  r.verdict = M.is_weight_sequence() ? Verdict::holds_on_truncation : Verdict::fails;
  if (auto w = M.axiom_witness()) r.witness = {*w};
  r.index_value = M.is_weight_sequence() ? 1.0 : 0.0;
  return r;
}

// j/m_j must vanish: a bounded trend is a failure here
ConditionReport vanishing(ConditionReport r, const std::string& name) {
  r.name = name;
  if (r.trend && *r.trend != Trend::vanishing && r.verdict != Verdict::fails) {
    r.verdict = Verdict::fails;
    if (r.witness.empty()) r.witness = {r.K};
  }
  return r;
}

ConditionReport omega_over_t(const WeightFunction& w, bool need_vanishing, const TrendThresholds& th) {
  const ValidityGrid g;
  std::vector<double> lr;
  std::vector<long long> idx;
  const double x0 = std::log(1.0), h = (std::log(g.t_max) - x0) / (g.points - 1);
  for (int i = 0; i < g.points; ++i) {
    const double t = std::exp(x0 + h * i);
    const double o = w.omega(t);
    if (o <= 0.0) continue;
    lr.push_back(std::log(o) - std::log(t));
    idx.push_back(i);
  }
  ConditionReport r = bounded_report(need_vanishing ? "omega_little_o_t" : "omega_big_o_t", lr, idx, g.points, th);
  r.note = "grid evidence on [1, 1e6]";
  return need_vanishing ? vanishing(r, r.name) : r;
}

}  // namespace

VerdictReport equality_verdict(const WeightSequence& M, const BaseSequence& k, Setting s, const VerdictOptions& opt) {
  std::vector<ConditionReport> checks;
  checks.push_back(weight_sequence_check(M));
  ConditionReport lr = lacunary_ratio(M, k, nullptr, opt.th);
  checks.push_back(lr);
  switch (s) {
    case Setting::B_Lp:
    case Setting::D:
      break;
    case Setting::E_Lp_roumieu:
      checks.push_back(base_sequence_check(k, opt.th));
      checks.push_back(analytic_inclusion_index(M, opt.th));
      break;
    case Setting::E_Lp_beurling:
      checks.push_back(base_sequence_check(k, opt.th));
      checks.push_back(vanishing(analytic_inclusion_index(M, opt.th), "j_over_m_vanishing"));
      break;
    case Setting::S: {
      const BaseSequence& ell = opt.ell ? *opt.ell : k;
      ConditionReport r2 = lacunary_ratio(M, ell, nullptr, opt.th);
      r2.name = "lacunary_ratio_ell";
      checks.push_back(r2);
      checks.push_back(growth_indices(M, opt.th).mg);
      break;
    }
    case Setting::B_Linfty_interval:
      checks.push_back(base_sequence_check(k, opt.th));
      if (opt.beurling) checks.push_back(vanishing(analytic_inclusion_index(M, opt.th), "j_over_m_vanishing"));
      else checks.push_back(analytic_inclusion_index(M, opt.th));
      break;
  }
  return conclude(s, std::move(checks), M.K(), "sequence " + M.label() + "; truncation-level evidence");
}

VerdictReport equality_verdict(const WeightFunction& w, const BaseSequence& k, Setting s, const VerdictOptions& opt) {
  std::vector<ConditionReport> checks;
  {
    const WeightFunctionValidity v = validate(w);
    ConditionReport r;
    r.name = "weight_function";
    r.K = 4096;
    r.verdict = Verdict::holds_on_truncation;
    r.note = "grid evidence";
    for (const auto* c : {&v.zero_at_origin, &v.monotone, &v.convex_phi, &v.log_little_o, &v.doubling}) {
      if (c->verdict != Verdict::holds_on_truncation) {
        r.verdict = c->verdict;
        r.witness = c->witness;
        if (r.witness.empty()) r.witness = {0};
        r.note = c->name;
        break;
      }
    }
    checks.push_back(r);
  }
  checks.push_back(base_sequence_check(k, opt.th));
  // moderate growth of the family replaces the lacunary-ratio hypothesis
  checks.push_back(ommg_check(w, opt.rho, opt.K));
  switch (s) {
    case Setting::B_Lp:
    case Setting::D:
      break;
    case Setting::E_Lp_roumieu:
      checks.push_back(omega_over_t(w, false, opt.th));
      break;
    case Setting::E_Lp_beurling:
      checks.push_back(omega_over_t(w, true, opt.th));
      break;
    case Setting::S: {
      ConditionReport r2 = base_sequence_check(opt.ell ? *opt.ell : k, opt.th);
      r2.name = "special_base_ell";
      checks.push_back(r2);
      break;
    }
    case Setting::B_Linfty_interval:
      checks.push_back(omega_over_t(w, opt.beurling, opt.th));
      break;
  }
  return conclude(s, std::move(checks), opt.K, "weight function " + w.label() + "; truncation-level evidence");
}

}  // namespace ultraweights
