#include "ultraweights/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ultraweights/errors.hpp"
#include "ultraweights/jet.hpp"
#include "ultraweights/report.hpp"

namespace ultraweights {

namespace {

using Kind = FunctionSpec::Kind;

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::sin: return "sin";
    case Kind::monomial: return "monomial";
    case Kind::gaussian: return "gaussian";
    case Kind::geometric: return "geometric";
    case Kind::lacunary_trig: return "lacunary_trig";
    case Kind::sech: return "sech";
    case Kind::gauss_cos: return "gauss_cos";
    case Kind::poly: return "poly";
  }
  return "?";
}

bool integral(double b) { return b >= 2.0 && std::floor(b) == b; }

}  // namespace

SampledFunction::SampledFunction(FunctionSpec spec) : spec_(std::move(spec)) {
  if (!(spec_.amplitude > 0.0) || !(spec_.dilation > 0.0))
    throw InputError("amplitude and dilation must be positive");
  std::string n = kind_name(spec_.kind);
  switch (spec_.kind) {
    case Kind::monomial:
      if (spec_.m < 0) throw InputError("monomial degree must be >= 0");
      n += "(m=" + std::to_string(spec_.m) + ")";
      break;
    case Kind::geometric:
      if (!(spec_.c > 0.0)) throw InputError("geometric needs c > 0");
      n += "(c=" + shortest(spec_.c) + ")";
      break;
    case Kind::lacunary_trig:
      if (!(spec_.b > 1.0) || spec_.terms < 1 || spec_.terms > 64)
        throw InputError("lacunary_trig needs b > 1 and 1 <= terms <= 64");
      n += "(b=" + shortest(spec_.b) + ",s=" + shortest(spec_.s) + ",terms=" + std::to_string(spec_.terms) + ")";
      break;
    case Kind::gauss_cos:
      n += "(c=" + shortest(spec_.c) + ")";
      break;
    case Kind::poly: {
      if (spec_.coeffs.empty()) throw InputError("poly needs at least one coefficient");
      dim_ = static_cast<int>(spec_.coeffs.begin()->first.size());
      if (dim_ < 1) throw InputError("poly exponent vectors must be non-empty");
      for (const auto& [e, c] : spec_.coeffs) {
        if (static_cast<int>(e.size()) != dim_) throw InputError("poly exponent vectors differ in length");
        for (int v : e)
          if (v < 0) throw InputError("poly exponents must be >= 0");
      }
      n += "(n=" + std::to_string(dim_) + ")";
      break;
    }
    default:
      break;
  }
  if (spec_.amplitude != 1.0) n += "*" + shortest(spec_.amplitude);
  if (spec_.dilation != 1.0) n += "@" + shortest(spec_.dilation);
  name_ = std::move(n);
}

bool SampledFunction::is_polynomial() const noexcept {
  return spec_.kind == Kind::poly || spec_.kind == Kind::monomial;
}

LineBehaviour SampledFunction::on_line() const noexcept {
  switch (spec_.kind) {
    case Kind::sin: return LineBehaviour::periodic;
    case Kind::lacunary_trig: return integral(spec_.b) ? LineBehaviour::periodic : LineBehaviour::unbounded;
    case Kind::gaussian:
    case Kind::sech:
    case Kind::gauss_cos: return LineBehaviour::decaying;
    default: return LineBehaviour::unbounded;
  }
}

Interval SampledFunction::line_domain(int max_order) const {
  const double d = spec_.dilation;
  const double k = std::max(0, max_order);
  switch (on_line()) {
    case LineBehaviour::periodic:
      return {0.0, 2.0 * std::numbers::pi / d};
    case LineBehaviour::decaying: {
      double w = 45.0;
      if (spec_.kind == Kind::gaussian) w = 8.0 + std::sqrt(2.0 * k + 1.0);
      if (spec_.kind == Kind::gauss_cos) w = 8.0 + std::sqrt(2.0 * k + 1.0) + std::abs(spec_.c);
      return {-w / d, w / d};
    }
    case LineBehaviour::unbounded:
      break;
  }
  throw InputError(name_ + " has no finite norms on the real line");
}

void SampledFunction::derivatives(double x, int order, std::span<double> out) const {
  if (order < 0 || order > kMaxOrder) throw InputError("derivative order must lie in [0, 64]");
  if (out.size() < static_cast<std::size_t>(order) + 1) throw InputError("derivative buffer too small");
  if (dim_ != 1) throw InputError(name_ + " is multivariate; use partial()");
  const double u = spec_.dilation * x;
  switch (spec_.kind) {
    case Kind::sin: {
      const double s = std::sin(u), c = std::cos(u);
      const double cyc[4] = {s, c, -s, -c};
      for (int k = 0; k <= order; ++k) out[k] = cyc[k % 4];
      break;
    }
    case Kind::monomial: {
      const int m = spec_.m;
      for (int k = 0; k <= order; ++k) {
        if (k > m) {
          out[k] = 0.0;
          continue;
        }
        double c = 1.0;
        for (int i = m - k + 1; i <= m; ++i) c *= i;
        out[k] = c * std::pow(u, m - k);
      }
      break;
    }
    case Kind::gaussian: {
      const double g = std::exp(-u * u);
      double hm = 0.0, h = 1.0;
      for (int k = 0; k <= order; ++k) {
        out[k] = (k % 2 ? -h : h) * g;
        const double hn = 2.0 * u * h - 2.0 * k * hm;
        hm = h;
        h = hn;
      }
      break;
    }
    case Kind::geometric: {
      const double q = 1.0 - spec_.c * u;
      if (!(q > 0.0)) throw NumericalError(name_ + " evaluated at or beyond its pole");
      double v = 1.0 / q;
      for (int k = 0; k <= order; ++k) {
        out[k] = v;
        v *= (k + 1) * spec_.c / q;
      }
      break;
    }
    case Kind::lacunary_trig: {
      std::fill(out.begin(), out.begin() + order + 1, 0.0);
      for (int i = 0; i < spec_.terms; ++i) {
        const double freq = std::pow(spec_.b, i);
        const double s = std::sin(freq * u), c = std::cos(freq * u);
        const double cyc[4] = {c, -s, -c, s};
        double w = std::pow(spec_.b, -spec_.s * i);
        for (int k = 0; k <= order; ++k) {
          out[k] += w * cyc[k % 4];
          w *= freq;
        }
      }
      break;
    }
    case Kind::sech: {
      Jet s, c;
      sinhcosh(Jet::variable(order, u), s, c);
      const Jet r = reciprocal(c);
      for (int k = 0; k <= order; ++k) out[k] = r.derivative(k);
      break;
    }
    case Kind::gauss_cos: {
      const Jet t = Jet::variable(order, u);
      Jet s, c;
      sincos(spec_.c * t, s, c);
      const Jet r = exp(-1.0 * (t * t)) * c;
      for (int k = 0; k <= order; ++k) out[k] = r.derivative(k);
      break;
    }
    case Kind::poly: {
      const Jet t = Jet::variable(order, u);
      Jet r(order, 0.0);
      for (const auto& [e, coef] : spec_.coeffs) r = r + coef * pow(t, e[0]);
      for (int k = 0; k <= order; ++k) out[k] = r.derivative(k);
      break;
    }
  }
  double scale = spec_.amplitude;
  for (int k = 0; k <= order; ++k) {
    out[k] *= scale;
    scale *= spec_.dilation;
  }
}

double SampledFunction::derivative(int order, double x) const {
  std::vector<double> buf(static_cast<std::size_t>(order) + 1);
  derivatives(x, order, buf);
  return buf[static_cast<std::size_t>(order)];
}

double SampledFunction::eval(std::span<const double> x) const {
  std::vector<int> zero(static_cast<std::size_t>(dim_), 0);
  return partial(zero, x);
}

double SampledFunction::partial(std::span<const int> alpha, std::span<const double> x) const {
  if (spec_.kind != Kind::poly) {
    if (alpha.size() != 1 || x.size() != 1) throw InputError(name_ + " is one-dimensional");
    return derivative(alpha[0], x[0]);
  }
  if (static_cast<int>(alpha.size()) != dim_ || static_cast<int>(x.size()) != dim_)
    throw InputError("dimension mismatch for " + name_);
  double total = 0.0;
  for (const auto& [e, coef] : spec_.coeffs) {
    double term = coef;
    for (int i = 0; i < dim_ && term != 0.0; ++i) {
      if (alpha[i] > e[i]) {
        term = 0.0;
        break;
      }
      for (int r = e[i] - alpha[i] + 1; r <= e[i]; ++r) term *= r;
      term *= std::pow(spec_.dilation * x[i], e[i] - alpha[i]) * std::pow(spec_.dilation, alpha[i]);
    }
    total += term;
  }
  return spec_.amplitude * total;
}

SampledFunction make_function(const FunctionSpec& spec) { return SampledFunction(spec); }

// --- norms ----------------------------------------------------------------

std::vector<std::vector<NormEstimate>> norms(const SampledFunction& f, int max_order, std::span<const double> ps,
                                             Interval dom, const NormOptions& opt) {
  if (!(dom.hi > dom.lo)) throw InputError("norm domain must have positive length");
  if (max_order < 0 || max_order > SampledFunction::kMaxOrder) throw InputError("norm order must lie in [0, 64]");
  for (double p : ps)
    if (!(p >= 1.0)) throw InputError("norm exponent must be >= 1");
  const std::size_t np = ps.size();
  const std::size_t no = static_cast<std::size_t>(max_order) + 1;

  // per (p, order): sup, or Simpson pieces (endpoints, odd sum, even sum)
  std::vector<std::vector<double>> sup(np, std::vector<double>(no, 0.0));
  std::vector<std::vector<double>> ends(np, std::vector<double>(no, 0.0));
  std::vector<std::vector<double>> odd(np, std::vector<double>(no, 0.0));
  std::vector<std::vector<double>> even(np, std::vector<double>(no, 0.0));
  std::vector<double> buf(no);

  auto accumulate = [&](double x, std::vector<std::vector<double>>* sums) {
    f.derivatives(x, max_order, buf);
    for (std::size_t a = 0; a < np; ++a) {
      for (std::size_t k = 0; k < no; ++k) {
        const double v = std::abs(buf[k]);
        if (std::isinf(ps[a])) {
          sup[a][k] = std::max(sup[a][k], v);
        } else if (sums) {
          (*sums)[a][k] += std::pow(v, ps[a]);
        }
      }
    }
  };

  int n = std::max(2, opt.initial_intervals);
  if (n % 2) ++n;
  double h = dom.length() / n;
  accumulate(dom.lo, &ends);
  accumulate(dom.hi, &ends);
  for (int i = 1; i < n; ++i) accumulate(dom.lo + i * h, i % 2 ? &odd : &even);

  auto estimate = [&](std::size_t a, std::size_t k) {
    if (std::isinf(ps[a])) return sup[a][k];
    const double s = h / 3.0 * (ends[a][k] + 4.0 * odd[a][k] + 2.0 * even[a][k]);
    return std::pow(std::max(0.0, s), 1.0 / ps[a]);
  };

  std::vector<std::vector<NormEstimate>> out(np, std::vector<NormEstimate>(no));
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t k = 0; k < no; ++k) out[a][k] = {estimate(a, k), std::numeric_limits<double>::infinity(), n};

  for (int level = 1; level <= opt.max_doublings; ++level) {
    // old odd and even points become even; the new midpoints are odd
    for (std::size_t a = 0; a < np; ++a)
      for (std::size_t k = 0; k < no; ++k) even[a][k] += odd[a][k], odd[a][k] = 0.0;
    const double hn = h / 2.0;
    for (int i = 0; i < n; ++i) accumulate(dom.lo + (2 * i + 1) * hn, &odd);
    n *= 2;
    h = hn;

    bool done = true;
    for (std::size_t a = 0; a < np; ++a) {
      for (std::size_t k = 0; k < no; ++k) {
        const double v = estimate(a, k);
        const double inc = std::abs(v - out[a][k].value);
        out[a][k] = {v, inc, n};
        if (inc > opt.rel_tol * v) done = false;
      }
    }
    if (done) return out;
  }

  // report the worst offender
  std::size_t wa = 0, wk = 0;
  double worst = -1.0;
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t k = 0; k < no; ++k) {
      const double rel = out[a][k].error / std::max(out[a][k].value, 1e-300);
      if (rel > worst) worst = rel, wa = a, wk = k;
    }
  throw NumericalError("norm refinement of " + f.name() + " did not converge after " +
                       std::to_string(opt.max_doublings) + " doublings (order " + std::to_string(wk) + ", p=" +
                       shortest(ps[wa]) + ", last estimate " + shortest(out[wa][wk].value) + ", previous " +
                       shortest(out[wa][wk].value - out[wa][wk].error) + ")");
}

NormEstimate norm(const SampledFunction& f, int order, double p, Interval dom, const NormOptions& opt) {
  const double ps[1] = {p};
  return norms(f, order, ps, dom, opt)[0][static_cast<std::size_t>(order)];
}

// --- directional derivatives ----------------------------------------------

double directional_derivative_any(const SampledFunction& f, std::span<const double> v, int order,
                                  std::span<const double> x) {
  if (!f.is_polynomial()) throw InputError("directional derivatives are supported for polynomials only");
  if (order < 0) throw InputError("order must be >= 0");
  const FunctionSpec& s = f.spec();
  const int n = f.dimension();
  if (static_cast<int>(v.size()) != n || static_cast<int>(x.size()) != n) throw InputError("dimension mismatch");
  if (s.kind == FunctionSpec::Kind::monomial) {
    // one-dimensional: d_v^k f = v^k f^(k)
    return std::pow(v[0], order) * f.derivative(order, x[0]);
  }
  // restrict to the line x + t v; every factor is a jet in t
  Jet total(order, 0.0);
  for (const auto& [e, coef] : s.coeffs) {
    Jet term(order, coef);
    for (int i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      Jet lin(order, s.dilation * x[i]);
      if (order >= 1) lin.c[1] = s.dilation * v[i];
      term = term * pow(lin, e[i]);
    }
    total = total + term;
  }
  return s.amplitude * total.derivative(order);
}

double directional_derivative(const SampledFunction& f, std::span<const double> v, int order,
                              std::span<const double> x) {
  double nn = 0.0;
  for (double c : v) nn += c * c;
  if (std::abs(std::sqrt(nn) - 1.0) > 1e-12) throw InputError("direction must be a unit vector");
  return directional_derivative_any(f, v, order, x);
}

}  // namespace ultraweights
