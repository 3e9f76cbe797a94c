// Acceptance run: one PASS/FAIL line per criterion.
//   ultraweights_acceptance            all criteria, exit 1 if any fails
//   ultraweights_acceptance --only N   criterion N, exit 1 if it fails
//   ultraweights_acceptance --report   all criteria, always exit 0

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "ultraweights/construct.hpp"
#include "ultraweights/corpus.hpp"
#include "ultraweights/errors.hpp"
#include "ultraweights/interp.hpp"
#include "ultraweights/jobs.hpp"
#include "ultraweights/lacunary.hpp"
#include "ultraweights/weightfn.hpp"
#include "ultraweights/weightseq.hpp"

using namespace ultraweights;

namespace {

struct Result {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// --- 1 --------------------------------------------------------------------

Result favard_kolmogorov() {
  Result r;
  const auto t0 = Clock::now();
  const double pi = std::numbers::pi;
  r.require(std::abs(favard(0) - 1.0) <= 1e-10, "favard(0) != 1");
  r.require(std::abs(favard(1) - pi / 2) <= 1e-10, "favard(1) != pi/2");
  r.require(std::abs(favard(2) - pi * pi / 8) <= 1e-10, "favard(2) != pi^2/8");
  r.require(std::abs(kolmogorov_constant(2, 1) - std::sqrt(2.0)) <= 1e-10, "K_{2,1} != sqrt 2");
  for (int k = 0; k <= 100; ++k) {
    const double v = favard(k);
    r.require(v >= 1.0 && v <= 2.0, "favard(" + std::to_string(k) + ") outside [1, 2]");
  }
  for (int m = 2; m <= 50; ++m)
    for (int j = 1; j < m; ++j)
      r.require(kolmogorov_constant(m, j) <= 2.0, "K_{" + std::to_string(m) + "," + std::to_string(j) + "} > 2");
  const double t = seconds_since(t0);
  r.require(t < 1.0, "runtime " + std::to_string(t) + " s >= 1 s");
  return r;
}

// --- 2 --------------------------------------------------------------------

std::vector<FunctionSpec> full_corpus() {
  std::vector<FunctionSpec> c(7);
  c[0].kind = FunctionSpec::Kind::sin;
  c[1].kind = FunctionSpec::Kind::monomial, c[1].m = 6;
  c[2].kind = FunctionSpec::Kind::gaussian;
  c[3].kind = FunctionSpec::Kind::geometric, c[3].c = 0.5;
  c[4].kind = FunctionSpec::Kind::lacunary_trig, c[4].b = 2.0, c[4].s = 1.5, c[4].terms = 6;
  c[5].kind = FunctionSpec::Kind::sech;
  c[6].kind = FunctionSpec::Kind::gauss_cos, c[6].c = 2.0;
  return c;
}

Result inequality_suite() {
  Result r;
  const auto t0 = Clock::now();
  const auto corpus = full_corpus();
  long long checked = 0, violations = 0, cg_cases = 0;
  std::string first;
  for (const auto& spec : corpus) {
    const SampledFunction f = make_function(spec);
    for (double p : {1.0, 2.0, kInfNorm}) {
      VerifyParams params;
      params.p = p;
      const NormTable lk = norm_table(f, InequalityKind::lk, params, 12);
      for (int m = 2; m <= 12; ++m)
        for (int j = 1; j < m; ++j) {
          params.j = j, params.m = m;
          const MarginReport mr = verify_from_table(lk, InequalityKind::lk, params);
          if (mr.skipped) continue;
          ++checked;
          // margin >= 1 - (1e-6 + quadrature error)
          if (!(mr.margin >= 1.0 - mr.tolerance)) {
            ++violations;
            if (first.empty()) first = f.name() + " lk j=" + std::to_string(j) + " m=" + std::to_string(m);
          }
        }
    }
    VerifyParams params;
    params.interval = {-1.0, 1.0};
    const NormTable cg = norm_table(f, InequalityKind::cg, params, 12);
    for (int m = 2; m <= 12; ++m)
      for (int j = 1; j < m; ++j) {
        params.j = j, params.m = m;
        const MarginReport mr = verify_from_table(cg, InequalityKind::cg, params);
        ++checked, ++cg_cases;
        if (!(mr.margin >= 1.0)) {
          ++violations;
          if (first.empty()) first = f.name() + " cg j=" + std::to_string(j) + " m=" + std::to_string(m);
        }
      }
  }
  r.require(corpus.size() >= 6, "corpus has fewer than 6 functions");
  r.require(violations == 0, std::to_string(violations) + " violations, first " + first);
  const double t = seconds_since(t0);
  r.require(t < 60.0, "runtime " + std::to_string(t) + " s >= 60 s");
  if (r.pass) r.detail = std::to_string(checked) + " cases (" + std::to_string(cg_cases) + " interval), 0 violations";
  return r;
}

// --- 3 --------------------------------------------------------------------

// d^alpha x^beta at x, by falling factorials
double exact_partial(const std::vector<int>& beta, const std::vector<int>& alpha, const std::vector<double>& x) {
  double v = 1.0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (alpha[i] > beta[i]) return 0.0;
    for (int t = 0; t < alpha[i]; ++t) v *= beta[i] - t;
    v *= std::pow(x[i], beta[i] - alpha[i]);
  }
  return v;
}

void multi_indices(int n, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = 0; a <= total; ++a) {
    cur.push_back(a);
    multi_indices(n, total - a, cur, out);
    cur.pop_back();
  }
}

Result polarization_exactness() {
  Result r;
  const auto t0 = Clock::now();
  const std::vector<double> point = {0.7, -0.4, 0.9};
  long long cases = 0;
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n) {
    const std::vector<double> x(point.begin(), point.begin() + n);
    for (int deg = 1; deg <= 6; ++deg) {
      std::vector<std::vector<int>> monos;
      std::vector<int> cur;
      multi_indices(n, deg, cur, monos);
      for (const auto& beta : monos) {
        FunctionSpec spec;
        spec.kind = FunctionSpec::Kind::poly;
        spec.dimension = n;
        spec.coeffs[beta] = 1.0;
        const SampledFunction f = make_function(spec);
        for (const auto& alpha : monos) {
          const double got = polarization_reconstruct(f, alpha, x);
          const double want = exact_partial(beta, alpha, x);
          worst = std::max(worst, std::abs(got - want));
          ++cases;
        }
      }
    }
  }
  r.require(worst <= 1e-9, "worst absolute error " + shortest(worst));
  const double t = seconds_since(t0);
  r.require(t < 10.0, "runtime " + std::to_string(t) + " s >= 10 s");
  if (r.pass) r.detail = std::to_string(cases) + " (monomial, alpha) pairs, worst error " + shortest(worst);
  return r;
}

// --- 4 --------------------------------------------------------------------

Result legendre_machinery() {
  Result r;
  WeightFunctionSpec lin;
  WeightFunctionSpec sqrt_spec;
  sqrt_spec.kind = WeightFunctionSpec::Kind::power;
  sqrt_spec.param = 0.5;
  WeightFunctionSpec logp;
  logp.kind = WeightFunctionSpec::Kind::log_power;
  logp.param = 2.0;
  const WeightFunction wt(lin), ws(sqrt_spec), wl(logp);

  // omega = t: phi* (y) = y ln y - y, so M^(rho)_k = (rho k / e)^k once rho k >= 1
  for (double rho : {0.5, 1.0, 2.0, 3.0}) {
    const AssociatedSequence a = associated_sequence(wt, rho, 256);
    for (int k = 1; k <= 256; ++k) {
      if (rho * k < 1.0) continue;
      const double want = k * (std::log(rho * k) - 1.0);
      r.require(std::abs(a.logM[k] - want) <= 1e-8 * std::max(1.0, std::abs(want)),
                "M^(" + shortest(rho) + ")_" + std::to_string(k) + " off the closed form");
    }
  }
  // Fenchel-Young: phi(t) + phi*(s) >= s t
  for (const WeightFunction* w : {&wt, &ws, &wl})
    for (int i = 0; i <= 40; ++i)
      for (int q = 0; q <= 40; ++q) {
        const double s = 0.25 * i, t = 0.25 * q;
        const double lhs = w->phi(t) + conjugate(*w, s);
        r.require(lhs >= s * t - 1e-9 * (1.0 + std::abs(s * t)), "Fenchel-Young fails for " + w->label());
      }
  for (const WeightFunction* w : {&wt, &ws}) {
    const ConditionReport c = ommg_check(*w, 1.0, 256);
    r.require(!c.failed() && c.index_value >= -1e-9, "ommg margin negative for " + w->label());
  }
  // m^(N rho)_k = m^(rho)_{N k}
  for (const WeightFunction* w : {&wt, &ws})
    for (int N : {2, 3, 4}) {
      const double rho = 1.0;
      const AssociatedSequence small = associated_sequence(*w, rho, 64 * N);
      const AssociatedSequence big = associated_sequence(*w, N * rho, 64);
      for (int k = 1; k <= 64; ++k) {
        const double a = big.log_m(k), b = small.log_m(N * k);
        r.require(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)),
                  "index identity fails for " + w->label() + " N=" + std::to_string(N) + " k=" + std::to_string(k));
      }
    }
  return r;
}

// --- 5 --------------------------------------------------------------------

Result propagation_soundness() {
  Result r;
  const auto t0 = Clock::now();
  {
    LacunaryInput in;
    in.M = WeightSequence::gevrey(1.0, 64);
    in.k = BaseSequence::linear(2, 64);
    in.C = 1.0, in.rho = 1.0, in.n = 1;
    const BoundCertificate c = propagate_global(in);
    r.require(std::abs(c.C_out - 2.0) <= 1e-12, "C_out = " + shortest(c.C_out) + ", expected 2");
    r.require(std::abs(c.rho_out - 4.0 * std::numbers::e) <= 1e-12 * 4.0 * std::numbers::e,
              "rho_out = " + shortest(c.rho_out) + ", expected 4e");
    // B at k_j = 2j is the input bound (k_j)^{k_j}
    for (long long kj = 2; kj <= 64; kj += 2)
      r.require(c.B[kj] == static_cast<double>(kj) * std::log(static_cast<double>(kj)),
                "B_" + std::to_string(kj) + " differs from the input");
  }
  {
    // f(x) = 1/(1 - x/2) on I = [-1, 1]: ||f^(l)|| = 2 l!
    FunctionSpec g;
    g.kind = FunctionSpec::Kind::geometric;
    g.c = 0.5;
    const SampledFunction f = make_function(g);
    const double ps[1] = {kInfNorm};
    const auto measured = norms(f, 20, ps, {-1.0, 1.0})[0];
    LacunaryInput in;
    in.M = WeightSequence::factorial_power(1.0, 20);
    in.k = BaseSequence::linear(2, 20);
    for (std::size_t j = 0; j < in.k.size(); ++j) in.log_bounds.push_back(std::log(measured[in.k[j]].value));
    const BoundCertificate c = propagate_interval_cg(in, 20, 2.0, false);
    for (int l = 0; l <= 20; ++l) {
      const double have = std::log(measured[l].value);
      r.require(c.B[l] >= have - 1e-12 * (1.0 + std::abs(have)), "B_" + std::to_string(l) + " below the true norm");
      const double claim = std::log(c.C_out) + (l ? l * (std::log(c.rho_out) + in.M.log_m(l)) : 0.0);
      r.require(claim >= have, "certified C (rho m_l)^l below the true norm at l=" + std::to_string(l));
    }
  }
  const double t = seconds_since(t0);
  r.require(t < 5.0, "runtime " + std::to_string(t) + " s >= 5 s");
  return r;
}

// --- 6 --------------------------------------------------------------------

Result hypothesis_fidelity() {
  Result r;
  for (double s : {1.0, 1.5, 2.0}) {
    const WeightSequence M = WeightSequence::gevrey(s, 512);
    const VerdictReport ok = equality_verdict(M, BaseSequence::linear(2, 512), Setting::B_Lp);
    r.require(ok.applies(), "gevrey(" + shortest(s) + "), k_j = 2j: " + ok.verdict);
    const VerdictReport bad = equality_verdict(M, BaseSequence::double_exponential(512), Setting::B_Lp);
    r.require(bad.failed() && bad.failed_check == "lacunary_ratio" && !bad.witness.empty(),
              "gevrey(" + shortest(s) + "), k_j = 2^(2^j): " + bad.verdict + " via " + bad.failed_check);
  }
  if (!r.pass) return r;
  // the constructed witness along its own indices, jmax = 4
  try {
    const CounterexampleWitness w = build_counterexample(FamilySpec{}, 4);
    const ConditionReport v = verify_counterexample(w);
    r.require(!v.failed(), "witness does not verify: " + v.note);
    r.require(v.trend && *v.trend == Trend::growing, "lacunary ratio of N along (k_j) is not growing");
    for (int j = 1; j <= 4 && r.pass; ++j) {
      const double l = std::stod(w.ell[j - 1]);
      double got = 0.0;
      for (const auto& [name, val] : v.details)
        if (name == "log2_n_over_m_at_l_" + std::to_string(j)) got = val;
      r.require(std::abs(got - std::exp2(l) / l) <= 1e-9 * std::exp2(l) / l, "ratio at l_j is not 2^(2^l/l)");
    }
  } catch (const Error& e) {
    r.require(false, std::string("dichotomy reproduced; jmax = 4 witness unavailable: ") + e.what());
  }
  return r;
}

// --- 7 --------------------------------------------------------------------

Result counterexample_construction() {
  Result r;
  const auto t0 = Clock::now();
  // first step by hand: A_1 = 4, M_1 = 1 gives nu_1 = 4; (k^k / 4)^(1/(k-1)) reaches 4 first at k = 4
  try {
    const CounterexampleWitness w1 = build_counterexample(FamilySpec{}, 1);
    r.require(w1.ell[0] == "1" && w1.k[0] == "4", "l_1 = " + w1.ell[0] + ", k_1 = " + w1.k[0]);
    const CounterexampleWitness w = build_counterexample(FamilySpec{}, 6);
    const ConditionReport v = verify_counterexample(w);
    r.require(!v.failed(), "verification: " + v.note);
    const ConditionReport m = minimality_check(w);
    r.require(!m.failed(), "minimality: " + m.note);
  } catch (const Error& e) {
    r.require(false, std::string("build_counterexample(jmax = 6): ") + e.what());
  }
  const double t = seconds_since(t0);
  r.require(t < 5.0, "runtime " + std::to_string(t) + " s >= 5 s");
  return r;
}

// --- 8 --------------------------------------------------------------------

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Result determinism() {
  Result r;
#ifndef ULTRAWEIGHTS_CLI
  r.require(false, "CLI not built");
  return r;
#else
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / ("uw_accept_" + std::to_string(::getpid()));
  fs::remove_all(root);
  const std::vector<std::pair<std::string, std::string>> jobs = {
      {"check", R"({"command":"check","sequence":{"kind":"gevrey","s":2.0,"K":512},"base":{"kind":"linear","step":2,"max_order":512}})"},
      {"check_omega", R"({"command":"check","omega":{"kind":"power","a":0.5},"base":{"kind":"linear","step":2,"max_order":256}})"},
      {"conjugate", R"({"command":"conjugate","omega":{"kind":"log_power","s":2.0},"s":{"from":0,"to":20,"count":41},"rho":[1,2,4],"K":128,"ommg":{"rho":1,"K":128}})"},
      {"propagate", R"({"command":"propagate","regime":"local","sequence":{"kind":"gevrey","s":2,"K":128},"base":{"kind":"linear","step":4,"max_order":128},"n":2,"C_geom":2})"},
      {"verify", R"({"command":"verify","corpus":[{"kind":"sin"},{"kind":"gaussian"},{"kind":"sech"},{"kind":"geometric","c":0.5},{"kind":"gauss_cos","c":2}],"kinds":["lk","cg"],"p":[1,2,"inf"],"m_max":10})"},
      {"verify_csv", R"({"command":"verify","corpus":[{"kind":"lacunary_trig"},{"kind":"monomial","m":6}],"kinds":["lk","cg"],"p":["inf"],"m_max":8,"output":{"path":"verify.csv","format":"csv"}})"},
      {"construct", R"({"command":"construct","family":{"kind":"gevrey_family"},"jmax":2,"witness_file":"w.json"})"},
      {"sweep", R"({"command":"sweep","parameter":"/sequence/s","values":[1,2,3],"job":{"command":"check","sequence":{"kind":"gevrey","s":1,"K":256},"base":{"kind":"double_exponential","max_order":256}}})"},
  };
  fs::create_directories(root);
  long long files = 0;
  for (const auto& [name, text] : jobs) {
    const fs::path job = root / (name + ".json");
    std::ofstream(job) << text;
    for (int threads : {1, 8}) {
      const fs::path out = root / (name + "_t" + std::to_string(threads));
      const std::string cmd = std::string(ULTRAWEIGHTS_CLI) + " --job " + job.string() + " --out-dir " + out.string() +
                              " --threads " + std::to_string(threads) + " 2>/dev/null";
      const int rc = std::system(cmd.c_str());
      r.require(rc != -1, "could not run the CLI");
    }
    const fs::path a = root / (name + "_t1"), b = root / (name + "_t8");
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(a)) names.push_back(e.path().filename().string());
    r.require(!names.empty(), name + ": no report written");
    for (const auto& e : fs::directory_iterator(b))
      r.require(fs::exists(a / e.path().filename()), name + ": file sets differ");
    for (const auto& n : names) {
      ++files;
      r.require(fs::exists(b / n) && slurp(a / n) == slurp(b / n), name + "/" + n + " differs between 1 and 8 threads");
    }
  }
  fs::remove_all(root);
  if (r.pass) r.detail = std::to_string(files) + " report files byte-identical";
  return r;
#endif
}

struct Criterion {
  const char* name;
  Result (*run)();
};

const Criterion kCriteria[] = {
    {"favard_kolmogorov_constants", favard_kolmogorov},
    {"inequality_suite", inequality_suite},
    {"polarization_exactness", polarization_exactness},
    {"legendre_machinery", legendre_machinery},
    {"propagation_soundness", propagation_soundness},
    {"hypothesis_check_fidelity", hypothesis_fidelity},
    {"counterexample_construction", counterexample_construction},
    {"determinism_threads_1_vs_8", determinism},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  bool report = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
    else if (a == "--report") report = true;
    else {
      std::cerr << "usage: " << argv[0] << " [--only N | --report]\n";
      return 2;
    }
  }
  int failed = 0;
  for (int i = 0; i < 8; ++i) {
    if (only && only != i + 1) continue;
    const auto t0 = Clock::now();
    Result res;
    try {
      res = kCriteria[i].run();
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds_since(t0));
    std::cout << (res.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << kCriteria[i].name << " (" << timing << ")";
    if (!res.detail.empty()) std::cout << ": " << res.detail;
    std::cout << std::endl;
    failed += !res.pass;
  }
  return report ? 0 : (failed ? 1 : 0);
}
