#include "ultraweights/interp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "ultraweights/errors.hpp"
#include "ultraweights/report.hpp"

namespace ultraweights {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// sum_{k>=0} (-1)^k a(k) for completely monotone a (Cohen, Rodriguez Villegas, Zagier)
template <class F>
long double alternating_sum(F a, int n) {
  long double d = std::pow(3.0L + std::sqrt(8.0L), static_cast<long double>(n));
  d = (d + 1.0L / d) / 2.0L;
  long double b = -1.0L, c = -d, s = 0.0L;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(k);
    b = static_cast<long double>(k + n) * static_cast<long double>(k - n) * b /
        ((static_cast<long double>(k) + 0.5L) * static_cast<long double>(k + 1));
  }
  return s / d;
}

double log_sum(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

double safe_log(double x) { return x > 0.0 ? std::log(x) : kNegInf; }

void check_triple(const NormTriple& t) {
  if (!(t.f_norm >= 0.0) || !std::isfinite(t.f_norm) || !(t.fm_norm >= 0.0) || !std::isfinite(t.fm_norm))
    throw InputError("norms must be finite and nonnegative");
  if (t.m < 1) throw InputError("m must be >= 1");
  if (!(t.p >= 1.0)) throw InputError("p must lie in [1, inf]");
}

void check_inner(const NormTriple& t, int j) {
  if (j < 1 || j > t.m - 1)
    throw InputError("j must lie in [1, m-1]; got j=" + std::to_string(j) + ", m=" + std::to_string(t.m));
}

BoundResult finish(std::string id, double log_value, const NormTriple& t, int j) {
  BoundResult b;
  b.formula_id = std::move(id);
  b.log_value = log_value;
  b.value = std::exp(log_value);
  b.inputs = {{"f_norm", t.f_norm}, {"fm_norm", t.fm_norm}, {"m", t.m}, {"j", j}, {"p", t.p}};
  return b;
}

}  // namespace

double favard(int r, double tol) {
  if (r < 0) throw InputError("favard index must be >= 0");
  if (!(tol > 0.0)) throw InputError("favard tolerance must be positive");
  const int n = std::min(80, static_cast<int>(std::ceil(-std::log(tol) / std::log(5.828))) + 4);
  const long double q = r + 1;
  long double sum;
  if (r % 2 == 0) {
    // Dirichlet beta(q)
    sum = alternating_sum([&](int i) { return std::pow(2.0L * i + 1.0L, -q); }, n);
  } else {
    // sum over odd integers of i^-q = (1 - 2^-q) zeta(q), zeta from the alternating eta
    const long double eta = alternating_sum([&](int i) { return std::pow(i + 1.0L, -q); }, n);
    sum = (1.0L - std::pow(2.0L, -q)) / (1.0L - std::pow(2.0L, 1.0L - q)) * eta;
  }
  const double k = static_cast<double>(4.0L / std::numbers::pi_v<long double> * sum);
  if (k < 1.0 - 1e-12 || k > 2.0 + 1e-12)
    throw NumericalError("favard constant k_" + std::to_string(r) + " = " + shortest(k) + " outside [1, 2]");
  return k;
}

double kolmogorov_constant(int m, int j) {
  if (m < 2 || j < 1 || j > m - 1) throw InputError("need m >= 2 and 1 <= j <= m-1");
  const double K = favard(m - j) / std::pow(favard(m), 1.0 - static_cast<double>(j) / m);
  if (K > 2.0 + 1e-12) throw NumericalError("K_{m,j} above 2 for m=" + std::to_string(m) + ", j=" + std::to_string(j));
  return K;
}

BoundResult lk_bound(const NormTriple& t, int j) {
  check_triple(t);
  check_inner(t, j);
  const double th = static_cast<double>(j) / t.m;
  double lv = kNegInf;
  if (t.f_norm > 0.0 && t.fm_norm > 0.0) lv = std::log(2.0) + (1.0 - th) * std::log(t.f_norm) + th * std::log(t.fm_norm);
  return finish("lk", lv, t, j);
}

BoundResult taylor_bound(const Geometry& g, const NormTriple& t, int j) {
  check_triple(t);
  if (j < 0 || j > t.m) throw InputError("taylor bound needs 0 <= j <= m");
  if (!(g.a > 0.0) || !(g.C_taylor > 0.0)) throw InputError("taylor bound needs a > 0 and C > 0");
  const double inner = log_sum(t.m * std::log(g.a) - std::lgamma(t.m + 1.0) + safe_log(t.fm_norm), safe_log(t.f_norm));
  const double lv = std::lgamma(j + 1.0) - j * std::log(g.a) + t.m * std::log(g.C_taylor) + inner;
  BoundResult b = finish("taylor", lv, t, j);
  b.inputs.emplace_back("a", g.a);
  b.inputs.emplace_back("C_taylor", g.C_taylor);
  return b;
}

BoundResult mixed_bound(const Geometry& g, const NormTriple& t, int j) {
  check_triple(t);
  check_inner(t, j);
  if (!(g.C_mixed > 0.0)) throw InputError("mixed bound needs C > 0");
  const double th = static_cast<double>(j) / t.m;
  const double lf = safe_log(t.f_norm);
  double first = kNegInf;
  if (t.f_norm > 0.0 && t.fm_norm > 0.0) first = (1.0 - th) * lf + th * std::log(t.fm_norm);
  const double second = j * std::log(static_cast<double>(t.m)) + lf;
  const double lv = t.m * std::log(g.C_mixed) + log_sum(first, second);
  BoundResult b = finish("mixed", lv, t, j);
  b.inputs.emplace_back("C_mixed", g.C_mixed);
  return b;
}

BoundResult cartan_gorny_bound(double interval_len, const NormTriple& t, int j) {
  check_triple(t);
  check_inner(t, j);
  if (!(interval_len > 0.0)) throw InputError("interval length must be positive");
  const double th = static_cast<double>(j) / t.m;
  const double factor = j * std::log(static_cast<double>(t.m) / j);
  const double cap = t.m;
  if (factor > cap + 1e-12) throw NumericalError("(m/j)^j exceeds e^m");
  double lv = kNegInf;
  if (t.f_norm > 0.0) {
    const double lf = std::log(t.f_norm);
    const double branch = std::max(safe_log(t.fm_norm), std::lgamma(t.m + 1.0) - t.m * std::log(interval_len) + lf);
    lv = std::log(4.0) + 2.0 * j + factor + (1.0 - th) * lf + th * branch;
  }
  BoundResult b = finish("cartan_gorny", lv, t, j);
  b.inputs.emplace_back("interval_len", interval_len);
  b.details = {{"log_m_over_j_pow_j", factor}, {"log_cap_e_pow_m", cap}};
  return b;
}

// --- polarization ---------------------------------------------------------

std::vector<PolarTerm> polarization_expand(std::span<const int> alpha) {
  int ell = 0;
  for (int a : alpha) {
    if (a < 0) throw InputError("multi-index entries must be >= 0");
    ell += a;
  }
  if (ell < 1) throw InputError("polarization needs |alpha| >= 1");
  if (ell > 20) throw InputError("polarization refuses |alpha| > 20 (2^l terms)");
  const std::size_t n = alpha.size();
  std::vector<std::size_t> axis;
  for (std::size_t i = 0; i < n; ++i)
    for (int r = 0; r < alpha[i]; ++r) axis.push_back(i);

  const double inv_fact = std::exp(-std::lgamma(ell + 1.0));
  std::vector<PolarTerm> out;
  out.reserve((std::size_t{1} << ell) - 1);
  for (unsigned mask = 1; mask < (1u << ell); ++mask) {
    const int s = std::popcount(mask);
    PolarTerm t;
    t.weight = s;
    t.coefficient = ((ell - s) % 2 ? -1.0 : 1.0) * std::pow(static_cast<double>(s), ell) * inv_fact;
    t.direction.assign(n, 0.0);
    for (int b = 0; b < ell; ++b)
      if (mask & (1u << b)) t.direction[axis[static_cast<std::size_t>(b)]] += 1.0;
    for (auto& v : t.direction) v /= s;
    out.push_back(std::move(t));
  }
  return out;
}

double polarization_reconstruct(const SampledFunction& f, std::span<const int> alpha, std::span<const double> x) {
  int ell = 0;
  for (int a : alpha) ell += a;
  double sum = 0.0;
  for (const auto& t : polarization_expand(alpha))
    sum += t.coefficient * directional_derivative_any(f, t.direction, ell, x);
  return sum;
}

// --- verification ---------------------------------------------------------

const char* to_string(InequalityKind k) noexcept {
  switch (k) {
    case InequalityKind::lk: return "lk";
    case InequalityKind::taylor: return "taylor";
    case InequalityKind::mixed: return "mixed";
    case InequalityKind::cg: return "cg";
  }
  return "?";
}

NormTable norm_table(const SampledFunction& f, InequalityKind kind, const VerifyParams& params, int max_order) {
  NormTable t;
  t.function = f.name();
  t.p = params.p;
  const double ps[1] = {params.p};
  switch (kind) {
    case InequalityKind::lk: {
      const LineBehaviour b = f.on_line();
      if (b == LineBehaviour::unbounded || (b == LineBehaviour::periodic && std::isfinite(params.p))) {
        t.infinite = true;
        t.note = "right-hand side infinite on R";
        return t;
      }
      const Interval dom = f.line_domain(max_order);
      t.inner = norms(f, max_order, ps, dom, params.norm_options)[0];
      t.outer = t.inner;
      t.note = b == LineBehaviour::periodic ? "one period" : "window [" + shortest(dom.lo) + ", " + shortest(dom.hi) + "]";
      return t;
    }
    case InequalityKind::cg: {
      if (std::isfinite(params.p)) throw InputError("the Cartan-Gorny bound is stated for p = inf");
      t.inner = norms(f, max_order, ps, params.interval, params.norm_options)[0];
      t.outer = t.inner;
      t.note = "I = [" + shortest(params.interval.lo) + ", " + shortest(params.interval.hi) + "]";
      return t;
    }
    case InequalityKind::taylor:
    case InequalityKind::mixed: {
      const double a = params.geometry.a;
      t.inner = norms(f, max_order, ps, {-a, a}, params.norm_options)[0];
      t.outer = norms(f, max_order, ps, {-2.0 * a, 2.0 * a}, params.norm_options)[0];
      t.note = "U = [-a, a], V = [-2a, 2a], a = " + shortest(a);
      return t;
    }
  }
  throw InputError("unknown inequality kind");
}

MarginReport verify_from_table(const NormTable& t, InequalityKind kind, const VerifyParams& params) {
  MarginReport r;
  r.function = t.function;
  r.kind = kind;
  r.j = params.j;
  r.m = params.m;
  r.p = params.p;
  r.note = t.note;
  if (t.infinite) {
    r.skipped = true;
    r.pass = true;
    r.margin = std::numeric_limits<double>::infinity();
    return r;
  }
  if (params.m >= static_cast<int>(t.outer.size()) || params.j < 0 || params.j > params.m)
    throw InputError("norm table does not cover order m=" + std::to_string(params.m));

  const NormEstimate& lhs = t.inner[static_cast<std::size_t>(params.j)];
  const NormEstimate& f0 = t.outer[0];
  const NormEstimate& fm = t.outer[static_cast<std::size_t>(params.m)];
  const NormTriple triple{f0.value, fm.value, params.m, params.p};

  BoundResult b;
  switch (kind) {
    case InequalityKind::lk: b = lk_bound(triple, params.j); break;
    case InequalityKind::taylor: b = taylor_bound(params.geometry, triple, params.j); break;
    case InequalityKind::mixed: b = mixed_bound(params.geometry, triple, params.j); break;
    case InequalityKind::cg: b = cartan_gorny_bound(params.interval.length(), triple, params.j); break;
  }
  auto rel = [](const NormEstimate& e) { return e.value > 0.0 ? e.error / e.value : 0.0; };
  r.lhs = lhs.value;
  r.bound = b.value;
  r.tolerance = params.tol_discretization + rel(lhs) + rel(f0) + rel(fm);
  r.margin = lhs.value > 0.0 ? b.value / lhs.value : std::numeric_limits<double>::infinity();
  r.pass = r.margin >= 1.0 - r.tolerance;
  return r;
}

MarginReport verify_on_function(const SampledFunction& f, InequalityKind kind, const VerifyParams& params) {
  if (params.m > SampledFunction::kMaxOrder)
    throw InputError("derivative order " + std::to_string(params.m) + " beyond what " + f.name() + " supports");
  return verify_from_table(norm_table(f, kind, params, params.m), kind, params);
}

Calibration calibrate(std::span<const SampledFunction> corpus, int m_max, double a) {
  if (m_max < 2) throw InputError("calibration needs m_max >= 2");
  Calibration c;
  const double ps[1] = {kInfNorm};
  for (const auto& f : corpus) {
    if (f.dimension() != 1) continue;
    const auto in = norms(f, m_max, ps, {-a, a})[0];
    const auto out = norms(f, m_max, ps, {-2.0 * a, 2.0 * a})[0];
    for (int m = 2; m <= m_max; ++m) {
      for (int j = 1; j < m; ++j) {
        const double lhs = in[j].value;
        if (!(lhs > 0.0)) continue;
        const double f0 = out[0].value, fmv = out[m].value;
        const double denom_t =
            log_sum(m * std::log(a) - std::lgamma(m + 1.0) + safe_log(fmv), safe_log(f0));
        const double ct = std::exp((std::log(lhs) + j * std::log(a) - std::lgamma(j + 1.0) - denom_t) / m);
        if (ct > c.C_taylor) {
          c.C_taylor = ct;
          c.taylor_witness = f.name() + " j=" + std::to_string(j) + " m=" + std::to_string(m);
        }
        const double th = static_cast<double>(j) / m;
        double first = kNegInf;
        if (f0 > 0.0 && fmv > 0.0) first = (1.0 - th) * std::log(f0) + th * std::log(fmv);
        const double denom_m = log_sum(first, j * std::log(static_cast<double>(m)) + safe_log(f0));
        const double cm = std::exp((std::log(lhs) - denom_m) / m);
        if (cm > c.C_mixed) {
          c.C_mixed = cm;
          c.mixed_witness = f.name() + " j=" + std::to_string(j) + " m=" + std::to_string(m);
        }
      }
    }
  }
  return c;
}

}  // namespace ultraweights
