#include "ultraweights/construct.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "ultraweights/errors.hpp"
#include "ultraweights/weightfn.hpp"

namespace ultraweights {

namespace {

namespace mp = boost::multiprecision;
using Int = mp::cpp_int;
using Real = mp::cpp_bin_float_100;

const Real& ln2() {
  static const Real v = mp::log(Real(2));
  return v;
}

Real log2r(const Real& x) { return mp::log(x) / ln2(); }

std::string str(const Real& x) { return x.str(0, std::ios_base::scientific); }
std::string str(const Int& x) { return x.str(); }

Int parse_int(const std::string& s, const char* what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw InputError(std::string(what) + ": '" + s + "' is not a nonnegative decimal integer");
  return Int(s);
}

Real parse_real(const std::string& s, const char* what) {
  try {
    return Real(s);
  } catch (const std::exception&) {
    throw InputError(std::string(what) + ": '" + s + "' is not a number");
  }
}

class Family {
 public:
  explicit Family(const FamilySpec& f) : spec_(f) {
    if (f.kind == FamilySpec::Kind::from_omega_family) w_.emplace_back(f.omega);
  }

  // log2 M^(s)_k, M_0 = 1
  Real log2M(double s, const Int& k) const {
    if (k == 0) return 0;
    if (spec_.kind == FamilySpec::Kind::gevrey_family) {
      const Real kr(k);
      return Real(s) * kr * log2r(kr);
    }
    const double kd = static_cast<double>(k);
    const WeightFunction& w = w_.front();
    const double v = (conjugate(w, s * kd) - conjugate(w, 0.0)) / s;
    return Real(v) / ln2();
  }

 private:
  FamilySpec spec_;
  std::vector<WeightFunction> w_;
};

struct Searcher {
  const ConstructOptions& opt;
  Int ceiling;

  explicit Searcher(const ConstructOptions& o) : opt(o), ceiling(Int(1) << o.index_ceiling_bits) {}

  // A_l = 2^(2^l) contributes exactly 2^l to a log2 numerator
  Real pow2(const Int& l) const {
    if (l >= (Int(1) << opt.exact_power_bits))
      throw NumericalError("A_l = 2^(2^l) at l=" + str(l) + " is past the exact log2 range (l < 2^" +
                           std::to_string(opt.exact_power_bits) + ")");
    return mp::ldexp(Real(1), static_cast<int>(l));
  }

  // smallest x >= start with margin(x) >= 0; margin is assumed eventually
  // nonnegative, so past the linear scan we gallop and bisect
  template <class F>
  Int smallest(const Int& start, F margin, const std::string& inequality) const {
    std::vector<std::pair<Int, Real>> trail;
    auto probe = [&](const Int& x) {
      if (x >= ceiling) fail(inequality, x, trail, "index ceiling 2^" + std::to_string(opt.index_ceiling_bits));
      Real m;
      try {
        m = margin(x);
      } catch (const NumericalError& e) {
        fail(inequality, x, trail, e.what());
      }
      trail.emplace_back(x, m);
      if (trail.size() > 12) trail.erase(trail.begin());
      return m >= 0;
    };
    Int x = start;
    for (long long i = 0; i < opt.linear_scan; ++i, ++x)
      if (probe(x)) return x;
    Int lo = x - 1;  // known to fail
    Int step = 1;
    Int hi = lo + step;
    while (!probe(hi)) {
      lo = hi;
      step *= 2;
      hi = lo + step;
    }
    while (hi - lo > 1) {
      const Int mid = lo + (hi - lo) / 2;
      if (probe(mid)) hi = mid;
      else lo = mid;
    }
    return hi;
  }

  [[noreturn]] static void fail(const std::string& inequality, const Int& at,
                                const std::vector<std::pair<Int, Real>>& trail, const std::string& why) {
    std::ostringstream os;
    os << "search for " << inequality << " stopped at index " << str(at) << " (" << why
       << "); recent margins (log2 nu_candidate - log2 nu_target):";
    if (trail.empty()) os << " none, no candidate could be evaluated";
    for (const auto& [x, m] : trail) os << " [" << str(x) << ": " << m.str(12) << "]";
    throw NumericalError(os.str());
  }
};

struct Chosen {
  std::vector<Int> ell, k;
  std::vector<Real> nu_ell, nu_k, N_ell, N_k;
};

Real log2_int(long long j) { return j <= 1 ? Real(0) : log2r(Real(j)); }

// log2 nu_k for k in (l_j, k_j]
Real nu_k_value(const Family& F, int j, const Int& lj, const Int& k, const Searcher& S) {
  const Real num = F.log2M(1.0 / j, k) - Real(k) * log2_int(j) - S.pow2(lj) - F.log2M(j, lj);
  return num / Real(k - lj);
}

// log2 nu_l for l in (k_{j-1}, l_j], j >= 2
Real nu_ell_value(const Family& F, int j, const Int& kprev, const Int& l, const Searcher& S) {
  const Real num = Real(kprev) * log2_int(j - 1) + S.pow2(l) + F.log2M(j, l) - F.log2M(1.0 / (j - 1), kprev);
  return num / Real(l - kprev);
}

Real nu_one_value(const Family& F, const Int& l, const Searcher& S) { return (S.pow2(l) + F.log2M(1.0, l)) / Real(l); }

}  // namespace

std::string family_log2(const FamilySpec& fam, double s, const std::string& k) {
  return str(Family(fam).log2M(s, parse_int(k, "index")));
}

ConditionReport check_family(const FamilySpec& fam) {
  const Family F(fam);
  const double grid[] = {0.25, 0.5, 1.0, 2.0, 4.0};
  constexpr int K = 256;
  ConditionReport r;
  r.name = "family";
  r.K = K;
  std::vector<std::vector<double>> L;
  try {
    for (double s : grid) {
      std::vector<double> row(K + 1);
      for (int k = 0; k <= K; ++k) row[k] = static_cast<double>(F.log2M(s, Int(k)));
      L.push_back(std::move(row));
    }
  } catch (const NumericalError& e) {
    throw InputError(std::string("family cannot be evaluated on the probe grid: ") + e.what());
  }
  for (std::size_t a = 0; a + 1 < L.size(); ++a)
    for (int k = 1; k <= K; ++k)
      if (L[a][k] > L[a + 1][k] + 1e-9 * (1.0 + std::abs(L[a + 1][k])))
        throw InputError("family is not totally ordered: M^(" + shortest(grid[a]) + ")_" + std::to_string(k) +
                         " > M^(" + shortest(grid[a + 1]) + ")_" + std::to_string(k));
  for (std::size_t a = 0; a < L.size(); ++a) {
    std::vector<double> lm;
    for (int k = 1; k <= K; ++k) lm.push_back(L[a][k] / k * std::log(2.0));
    const auto t = classify_trend(lm);
    if (!t || *t != Trend::growing)
      throw InputError("m^(" + shortest(grid[a]) + ")_k does not grow on the probe grid (divergence evidence missing)");
  }
  r.verdict = Verdict::holds_on_truncation;
  r.trend = Trend::growing;
  r.index_value = 1.0;
  r.note = "total order and growing m^(s) on s in {1/4, 1/2, 1, 2, 4}, k <= 256";
  return r;
}

CounterexampleWitness build_counterexample(const FamilySpec& fam, int jmax, const ConstructOptions& opt) {
  if (jmax < 1) throw InputError("jmax must be >= 1");
  if (opt.index_ceiling_bits < 8 || opt.exact_power_bits < 1 || opt.exact_power_bits > 30 || opt.linear_scan < 1)
    throw InputError("construct options out of range");
  check_family(fam);
  const Family F(fam);
  const Searcher S(opt);
  Chosen c;

  const Int l1 = S.smallest(Int(1), [&](const Int& l) { return nu_one_value(F, l, S); }, "nu_1 >= 1 (l_1)");
  c.ell.push_back(l1);
  c.nu_ell.push_back(nu_one_value(F, l1, S));
  c.N_ell.push_back(S.pow2(l1) + F.log2M(1.0, l1));

  for (int j = 1; j <= jmax; ++j) {
    if (j >= 2) {
      const Int kp = c.k.back();
      const Real target = c.nu_k.back();
      const Int l = S.smallest(
          kp + 1, [&](const Int& x) { return nu_ell_value(F, j, kp, x, S) - target; },
          "nu_{k_" + std::to_string(j - 1) + "} <= nu_{l_" + std::to_string(j) + "} with log2 nu_{k_" +
              std::to_string(j - 1) + "} = " + target.str(12));
      c.ell.push_back(l);
      c.nu_ell.push_back(nu_ell_value(F, j, kp, l, S));
      c.N_ell.push_back(S.pow2(l) + F.log2M(j, l));
    }
    const Int lj = c.ell.back();
    const Real target = c.nu_ell.back();
    const Int k = S.smallest(
        lj + 1, [&](const Int& x) { return nu_k_value(F, j, lj, x, S) - target; },
        "nu_{l_" + std::to_string(j) + "} <= nu_{k_" + std::to_string(j) + "} with log2 nu_{l_" +
            std::to_string(j) + "} = " + target.str(12));
    c.k.push_back(k);
    c.nu_k.push_back(nu_k_value(F, j, lj, k, S));
    c.N_k.push_back(F.log2M(1.0 / j, k) - Real(k) * log2_int(j));
  }

  CounterexampleWitness w;
  w.jmax = jmax;
  w.family = fam;
  for (int j = 0; j < jmax; ++j) {
    w.ell.push_back(str(c.ell[j]));
    w.k.push_back(str(c.k[j]));
    w.logN2_ell.push_back(str(c.N_ell[j]));
    w.logN2_k.push_back(str(c.N_k[j]));
    w.logNu2_ell.push_back(str(c.nu_ell[j]));
    w.logNu2_k.push_back(str(c.nu_k[j]));
  }
  return w;
}

namespace {

struct Parsed {
  std::vector<Int> ell, k;
  std::vector<Real> N_ell, N_k, nu_ell, nu_k;
};

Parsed parse(const CounterexampleWitness& w) {
  const std::size_t J = static_cast<std::size_t>(w.jmax);
  if (w.jmax < 1 || w.ell.size() != J || w.k.size() != J || w.logN2_ell.size() != J || w.logN2_k.size() != J ||
      w.logNu2_ell.size() != J || w.logNu2_k.size() != J)
    throw InputError("witness arrays must all have jmax entries");
  Parsed p;
  for (std::size_t j = 0; j < J; ++j) {
    p.ell.push_back(parse_int(w.ell[j], "ell"));
    p.k.push_back(parse_int(w.k[j], "k"));
    p.N_ell.push_back(parse_real(w.logN2_ell[j], "logN2"));
    p.N_k.push_back(parse_real(w.logN2_k[j], "logN2"));
    p.nu_ell.push_back(parse_real(w.logNu2_ell[j], "logNu2"));
    p.nu_k.push_back(parse_real(w.logNu2_k[j], "logNu2"));
  }
  return p;
}

bool close(const Real& a, const Real& b) { return mp::abs(a - b) <= Real(1e-9); }

ConditionReport failing(ConditionReport r, const std::string& what, long long j) {
  r.verdict = Verdict::fails;
  r.witness = {j};
  r.note = what + " fails at j=" + std::to_string(j);
  return r;
}

}  // namespace

ConditionReport verify_counterexample(const CounterexampleWitness& w) {
  const Parsed p = parse(w);
  const Family F(w.family);
  ConstructOptions big;
  big.exact_power_bits = 30;
  const Searcher S(big);
  const std::size_t J = p.ell.size();

  ConditionReport r;
  r.name = "counterexample";
  r.K = w.jmax;

  // interlacing
  if (p.ell[0] < 1) return failing(r, "interlacing", 1);
  for (std::size_t j = 0; j < J; ++j) {
    if (!(p.ell[j] < p.k[j])) return failing(r, "interlacing", static_cast<long long>(j) + 1);
    if (j + 1 < J && !(p.k[j] < p.ell[j + 1])) return failing(r, "interlacing", static_cast<long long>(j) + 2);
  }
  // values at k_j
  for (std::size_t j = 0; j < J; ++j) {
    const int jj = static_cast<int>(j) + 1;
    if (!close(p.N_k[j], F.log2M(1.0 / jj, p.k[j]) - Real(p.k[j]) * log2_int(jj)))
      return failing(r, "value of N at k_j", jj);
  }
  // values at l_j
  for (std::size_t j = 0; j < J; ++j) {
    const int jj = static_cast<int>(j) + 1;
    if (!close(p.N_ell[j], S.pow2(p.ell[j]) + F.log2M(jj, p.ell[j]))) return failing(r, "value of N at l_j", jj);
  }
  // N is the running product of its plateaus
  Real acc = Real(p.ell[0]) * p.nu_ell[0];
  Int at = p.ell[0];
  for (std::size_t j = 0; j < J; ++j) {
    const int jj = static_cast<int>(j) + 1;
    if (j > 0) {
      acc += Real(p.ell[j] - at) * p.nu_ell[j];
      at = p.ell[j];
    }
    if (!close(acc, p.N_ell[j])) return failing(r, "plateau consistency at l_j", jj);
    acc += Real(p.k[j] - at) * p.nu_k[j];
    at = p.k[j];
    if (!close(acc, p.N_k[j])) return failing(r, "plateau consistency at k_j", jj);
  }
  // nu nondecreasing, nu_1 >= 1
  if (p.nu_ell[0] < Real(-1e-9)) return failing(r, "nu_1 >= 1", 1);
  Real min_nu = p.nu_ell[0];
  for (std::size_t j = 0; j < J; ++j) {
    const int jj = static_cast<int>(j) + 1;
    if (p.nu_k[j] < p.nu_ell[j] - Real(1e-9)) return failing(r, "nu monotone at k_j", jj);
    if (j + 1 < J && p.nu_ell[j + 1] < p.nu_k[j] - Real(1e-9)) return failing(r, "nu monotone at l_j", jj + 1);
    min_nu = std::min({min_nu, p.nu_k[j], p.nu_ell[j]});
  }

  // the lacunary ratio mechanism: n_{l_j} / m^(j)_{l_j} = 2^(2^l_j / l_j)
  std::vector<double> ln_ratio;
  for (std::size_t j = 0; j < J; ++j) {
    const int jj = static_cast<int>(j) + 1;
    const Real l2 = (p.N_ell[j] - F.log2M(jj, p.ell[j])) / Real(p.ell[j]);
    r.details.emplace_back("log2_n_over_m_at_l_" + std::to_string(jj), static_cast<double>(l2));
    ln_ratio.push_back(static_cast<double>(l2 * ln2()));
  }
  for (std::size_t j = 0; j + 1 < J; ++j) {
    const Real a = p.N_k[j + 1] / Real(p.k[j + 1]);
    const Real b = p.N_k[j] / Real(p.k[j]);
    r.details.emplace_back("log2_n_k_ratio_" + std::to_string(j + 1), static_cast<double>(a - b));
  }
  r.details.emplace_back("min_log2_nu", static_cast<double>(min_nu));
  r.trend = classify_trend(ln_ratio);
  r.index_value = std::exp(ln_ratio.back());
  r.log_index_value = ln_ratio.back();
  r.verdict = Verdict::holds_on_truncation;
  r.note = "interlacing, values at k_j and l_j, plateau consistency and nu monotone hold; nu_j >= 1 throughout: " +
           std::string(min_nu >= Real(-1e-9) ? "yes" : "no");
  return r;
}

ConditionReport minimality_check(const CounterexampleWitness& w) {
  const Parsed p = parse(w);
  const Family F(w.family);
  ConstructOptions big;
  big.exact_power_bits = 30;
  const Searcher S(big);
  ConditionReport r;
  r.name = "minimality";
  r.K = w.jmax;
  if (p.ell[0] > 1 && nu_one_value(F, p.ell[0] - 1, S) >= 0) return failing(r, "l_1 minimality", 1);
  for (std::size_t j = 0; j < p.ell.size(); ++j) {
    const int jj = static_cast<int>(j) + 1;
    if (j > 0 && p.ell[j] - 1 > p.k[j - 1] && nu_ell_value(F, jj, p.k[j - 1], p.ell[j] - 1, S) >= p.nu_k[j - 1])
      return failing(r, "l_j minimality", jj);
    if (p.k[j] - 1 > p.ell[j] && nu_k_value(F, jj, p.ell[j], p.k[j] - 1, S) >= p.nu_ell[j])
      return failing(r, "k_j minimality", jj);
  }
  r.verdict = Verdict::holds_on_truncation;
  r.index_value = 1.0;
  r.note = "every chosen index minus one violates its selecting inequality";
  return r;
}

}  // namespace ultraweights
