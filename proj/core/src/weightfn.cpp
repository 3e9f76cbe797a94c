#include "ultraweights/weightfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ultraweights/errors.hpp"

namespace ultraweights {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kE = 2.718281828459045;

// ln(e + e^t) without overflow
double log_e_plus_exp(double t) {
  return t > 1.0 ? t + std::log1p(std::exp(1.0 - t)) : 1.0 + std::log1p(std::exp(t - 1.0));
}

struct Peak {
  double t;
  double g;
};

Peak maximise(const WeightFunction& w, double s, const ConjugateOptions& opt) {
  if (!(s >= 0.0) || !std::isfinite(s)) throw InputError("conjugate needs s >= 0, got " + shortest(s));
  auto g = [&](double t) { return s * t - w.phi(t); };

  Peak best{0.0, g(0.0)};
  auto consider = [&](double t, double v) {
    if (v > best.g) best = {t, v};
    return v;
  };

  double lo = 0.0;
  double hi = 1.0;
  double ghi = consider(1.0, g(1.0));
  if (ghi > g(0.0)) {
    // expand while the objective still increases
    double prev_t = 0.0;
    for (;;) {
      const double nt = 2.0 * hi;
      if (nt > opt.t_max)
        throw NumericalError("conjugate bracket did not close: s=" + shortest(s) + ", t_max=" + shortest(opt.t_max));
      const double gn = consider(nt, g(nt));
      if (!(gn > ghi)) {
        lo = prev_t;
        hi = nt;
        break;
      }
      prev_t = hi;
      hi = nt;
      ghi = gn;
    }
  }

  constexpr double r = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - r * (b - a), x2 = a + r * (b - a);
  double g1 = consider(x1, g(x1)), g2 = consider(x2, g(x2));
  for (int it = 0; it < opt.max_iterations; ++it) {
    if (b - a <= opt.rel_width * std::max(1.0, 0.5 * (a + b))) break;
    if (g1 < g2) {
      a = x1;
      x1 = x2, g1 = g2;
      x2 = a + r * (b - a);
      g2 = consider(x2, g(x2));
    } else {
      b = x2;
      x2 = x1, g2 = g1;
      x1 = b - r * (b - a);
      g1 = consider(x1, g(x1));
    }
  }
  return best;
}

ConditionReport simple(std::string name, Verdict v, double value, std::vector<long long> witness, std::string note) {
  ConditionReport r;
  r.name = std::move(name);
  r.verdict = v;
  r.index_value = value;
  r.log_index_value = value > 0 ? std::log(value) : -kInf;
  r.witness = std::move(witness);
  r.note = std::move(note);
  return r;
}

}  // namespace

WeightFunction::WeightFunction(WeightFunctionSpec spec) : spec_(spec) {
  using K = WeightFunctionSpec::Kind;
  if (spec_.kind == K::power && !(spec_.param > 0.0 && spec_.param <= 1.0))
    throw InputError("power weight needs 0 < a <= 1, got " + shortest(spec_.param));
  if (spec_.kind == K::log_power && !(spec_.param > 1.0))
    throw InputError("log_power weight needs s > 1, got " + shortest(spec_.param));
  omega_at_one_ = spec_.normalized ? raw_omega(1.0) : 0.0;
}

double WeightFunction::raw_omega(double t) const {
  using K = WeightFunctionSpec::Kind;
  if (t <= 0.0) return 0.0;
  switch (spec_.kind) {
    case K::linear: return t;
    case K::power: return std::pow(t, spec_.param);
    case K::log_power: return t <= 1.0 ? 0.0 : std::pow(std::log(t), spec_.param);
    case K::t_over_log: return t / std::log(kE + t);
  }
  return 0.0;
}

double WeightFunction::raw_phi(double t) const {
  using K = WeightFunctionSpec::Kind;
  switch (spec_.kind) {
    case K::linear: return std::exp(t);
    case K::power: return std::exp(spec_.param * t);
    case K::log_power: return t <= 0.0 ? 0.0 : std::pow(t, spec_.param);
    case K::t_over_log: return std::exp(t - std::log(log_e_plus_exp(t)));
  }
  return 0.0;
}

double WeightFunction::omega(double t) const {
  const double v = raw_omega(t);
  return spec_.normalized ? std::max(0.0, v - omega_at_one_) : v;
}

double WeightFunction::phi(double t) const {
  const double v = raw_phi(t);
  return spec_.normalized ? std::max(0.0, v - omega_at_one_) : v;
}

bool WeightFunction::vanishes_on_unit_interval() const noexcept {
  return spec_.normalized || spec_.kind == WeightFunctionSpec::Kind::log_power;
}

std::string WeightFunction::label() const {
  using K = WeightFunctionSpec::Kind;
  std::string s;
  switch (spec_.kind) {
    case K::linear: s = "t"; break;
    case K::power: s = "t^" + shortest(spec_.param); break;
    case K::log_power: s = "log_power(" + shortest(spec_.param) + ")"; break;
    case K::t_over_log: s = "t/ln(e+t)"; break;
  }
  return spec_.normalized ? "normalized(" + s + ")" : s;
}

// --- validity -------------------------------------------------------------

bool WeightFunctionValidity::ok() const noexcept {
  for (const auto* r : {&zero_at_origin, &monotone, &convex_phi, &log_little_o, &doubling})
    if (r->verdict != Verdict::holds_on_truncation) return false;
  return true;
}

WeightFunctionValidity validate(const WeightFunction& w, const ValidityGrid& grid) {
  if (grid.points < 8 || !(grid.t_min > 0.0) || !(grid.t_max > grid.t_min))
    throw InputError("validity grid needs >= 8 points on 0 < t_min < t_max");
  const int n = grid.points;
  const double x0 = std::log(grid.t_min);
  const double h = (std::log(grid.t_max) - x0) / (n - 1);
  std::vector<double> t(n), om(n), ph(n);
  for (int i = 0; i < n; ++i) {
    const double x = x0 + h * i;
    t[i] = std::exp(x);
    om[i] = w.omega(t[i]);
    ph[i] = w.phi(x);
  }
  const std::string note = "grid evidence, geometric grid [" + shortest(grid.t_min) + ", " + shortest(grid.t_max) +
                           "] with " + std::to_string(n) + " points";

  WeightFunctionValidity v;
  const double o0 = w.omega(0.0);
  v.zero_at_origin = simple("omega_zero", o0 == 0.0 ? Verdict::holds_on_truncation : Verdict::fails, o0,
                            o0 == 0.0 ? std::vector<long long>{} : std::vector<long long>{0}, note);

  v.monotone = simple("omega_monotone", Verdict::holds_on_truncation, 0.0, {}, note);
  for (int i = 1; i < n; ++i) {
    if (om[i] < om[i - 1] - 1e-12 * (1.0 + std::abs(om[i - 1]))) {
      v.monotone.verdict = Verdict::fails;
      v.monotone.witness = {i};
      v.monotone.index_value = om[i] - om[i - 1];
      break;
    }
  }

  v.convex_phi = simple("phi_convex", Verdict::holds_on_truncation, 0.0, {}, note);
  double worst = kInf;
  for (int i = 1; i + 1 < n; ++i) {
    const double d2 = ph[i + 1] - 2.0 * ph[i] + ph[i - 1];
    const double scaled = d2 / (1.0 + std::abs(ph[i]));
    if (scaled < worst) {
      worst = scaled;
      v.convex_phi.witness = {i};
    }
  }
  v.convex_phi.index_value = worst;
  v.convex_phi.log_index_value = -kInf;
  if (worst < -1e-9) {
    v.convex_phi.verdict = Verdict::fails;
  } else {
    v.convex_phi.witness.clear();
  }

  {
    std::vector<double> lr;
    std::vector<long long> idx;
    for (int i = 0; i < n; ++i) {
      if (t[i] < kE || om[i] <= 0.0) continue;
      lr.push_back(std::log(om[i]) - std::log(std::log(t[i])));
      idx.push_back(i);
    }
    ConditionReport r = bounded_report("log_little_o", lr, idx, n, {});
    // here growth is the desired behaviour
    if (!r.trend) {
      r.verdict = Verdict::inconclusive;
    } else if (*r.trend == Trend::growing) {
      r.verdict = Verdict::holds_on_truncation;
      r.witness.clear();
    } else {
      r.verdict = Verdict::fails;
      r.witness = {idx.back()};
    }
    r.note = note;
    v.log_little_o = std::move(r);
  }

  {
    std::vector<double> lr;
    std::vector<long long> idx;
    for (int i = 0; i < n; ++i) {
      if (om[i] <= 0.0) continue;
      lr.push_back(std::log(w.omega(2.0 * t[i])) - std::log(om[i]));
      idx.push_back(i);
    }
    v.doubling = bounded_report("doubling", lr, idx, n, {});
    v.doubling.note = note;
  }
  return v;
}

// --- conjugate ------------------------------------------------------------

double conjugate(const WeightFunction& w, double s, const ConjugateOptions& opt) {
  return maximise(w, s, opt).g;
}

double conjugate_argmax(const WeightFunction& w, double s, const ConjugateOptions& opt) {
  return maximise(w, s, opt).t;
}

WeightSequence AssociatedSequence::to_weight_sequence() const {
  std::vector<double> out(logM.size());
  for (std::size_t k = 0; k < logM.size(); ++k) out[k] = logM[k] - shift;
  std::string l = label;
  if (shift != 0.0) l += " shifted by " + shortest(-shift);
  return WeightSequence::from_log_table(std::move(out), std::move(l));
}

AssociatedSequence associated_sequence(const WeightFunction& w, double rho, int K, const ConjugateOptions& opt) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw InputError("rho must be positive, got " + shortest(rho));
  if (K < kMinTruncation) throw InputError("truncation K must be >= " + std::to_string(kMinTruncation));
  AssociatedSequence a;
  a.rho = rho;
  a.label = "M^(" + shortest(rho) + ")[" + w.label() + "]";
  a.logM.resize(static_cast<std::size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) a.logM[k] = conjugate(w, rho * k, opt) / rho;
  a.shift = a.logM[0];
  return a;
}

Absorption bmt_absorption(const WeightFunction& w, double sigma, double rho, int K, double H_max) {
  if (!(sigma > 0.0)) throw InputError("sigma must be positive");
  const AssociatedSequence base = associated_sequence(w, rho, K);
  const double ls = std::log(sigma);
  Absorption out;
  const int head_end = (2 * (K + 1)) / 3;
  for (double H = 1.0; H <= H_max; H *= 2.0) {
    AbsorptionStep step{H, -kInf, -kInf, false};
    try {
      const AssociatedSequence big = associated_sequence(w, H * rho, K);
      double head = -kInf;
      for (int k = 0; k <= K; ++k) {
        const double d = k * ls + base.logM[k] - big.logM[k];
        step.log_sup = std::max(step.log_sup, d);
        if (k < head_end) head = std::max(head, d);
        else step.log_tail_sup = std::max(step.log_tail_sup, d);
      }
      step.stable = std::isfinite(step.log_sup) && step.log_tail_sup <= head + 1e-9 * (1.0 + std::abs(head));
    } catch (const NumericalError&) {
      out.trajectory.push_back(step);
      break;
    }
    out.trajectory.push_back(step);
    if (step.stable) {
      out.H = H;
      out.log_sup = step.log_sup;
      out.C = std::max(1.0, std::exp(step.log_sup));
      return out;
    }
  }
  std::ostringstream msg;
  msg << "no absorption constant H <= " << shortest(H_max) << " for sigma=" << shortest(sigma)
      << ", rho=" << shortest(rho) << ", K=" << K << "; trajectory (H, log sup, log tail sup):";
  for (const auto& s : out.trajectory)
    msg << " (" << shortest(s.H) << ", " << shortest(s.log_sup) << ", " << shortest(s.log_tail_sup) << ")";
  throw NumericalError(msg.str());
}

ConditionReport ommg_check(const WeightFunction& w, double rho, int K) {
  const AssociatedSequence A = associated_sequence(w, rho, K);
  const AssociatedSequence B = associated_sequence(w, 2.0 * rho, K);
  ConditionReport r;
  r.name = "ommg";
  r.K = K;
  r.note = "log-domain margin M2_j + M2_k - M_{j+k}";
  double worst = kInf;
  long long wj = 0, wk = 0;
  bool violated = false;
  for (int j = 0; j <= K; ++j) {
    for (int k = j; j + k <= K; ++k) {
      const double margin = B.logM[j] + B.logM[k] - A.logM[j + k];
      if (margin < worst) worst = margin, wj = j, wk = k;
      if (margin < -1e-9 * (1.0 + std::abs(A.logM[j + k]))) violated = true;
    }
  }
  r.index_value = worst;
  r.log_index_value = worst;
  r.witness = {wj, wk};
  r.verdict = violated ? Verdict::fails : Verdict::holds_on_truncation;
  return r;
}

}  // namespace ultraweights
