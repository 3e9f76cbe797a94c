#include "ultraweights/jobs.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <thread>

#include "ultraweights/errors.hpp"

namespace ultraweights {

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& f) {
  std::vector<std::exception_ptr> errors(n);
  const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
          try {
            f(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') ++line, col = 1;
      else ++col;
    }
    std::string what = e.what();
    if (const auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON (" + what +
                     ")");
  }
}

namespace {

std::vector<double> number_list(const Json& j, const std::string& where) {
  if (!j.is_array()) return {to_number(j, where)};
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(to_number(j[i], where));
  return out;
}

std::vector<std::string> text_list(const Json& j, const std::string& where) {
  if (j.is_string()) return {j.get<std::string>()};
  if (!j.is_array()) throw InputError(where + ": expected a string or an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InputError(where + ": expected strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

InequalityKind parse_kind(const std::string& s) {
  for (InequalityKind k : {InequalityKind::lk, InequalityKind::taylor, InequalityKind::mixed, InequalityKind::cg})
    if (s == to_string(k)) return k;
  throw InputError("unknown inequality kind '" + s + "'");
}

JobOutcome failure(const std::string& command, const char* status, const std::string& message,
                   const std::vector<long long>& witness = {}) {
  JobOutcome out;
  out.exit_code = kExitHypothesis;
  out.report["command"] = command;
  out.report["status"] = status;
  out.report["message"] = message;
  Json w = Json::array();
  for (long long x : witness) w.push_back(x);
  out.report["witness"] = std::move(w);
  CsvWriter c({"command", "status", "message"});
  c.cell(command).cell(std::string(status)).cell(message);
  c.end_row();
  out.csv = c.str();
  out.message = command + ": " + status + ": " + message;
  return out;
}

// --- check ----------------------------------------------------------------

std::vector<Setting> parse_settings(Fields& o) {
  std::vector<Setting> out;
  if (!o.has("settings")) {
    for (Setting s : {Setting::B_Lp, Setting::D, Setting::E_Lp_roumieu, Setting::E_Lp_beurling, Setting::S,
                      Setting::B_Linfty_interval})
      out.push_back(s);
    return out;
  }
  for (const auto& s : text_list(o.at("settings"), "settings")) out.push_back(parse_setting(s));
  return out;
}

JobOutcome run_check(Fields& o, int threads) {
  if (o.has("sequence") == o.has("omega")) throw InputError("check: give exactly one of 'sequence' or 'omega'");
  const BaseSequence k = build_base(parse_base(o.at("base")));
  const std::vector<Setting> settings = parse_settings(o);
  VerdictOptions vo;
  vo.beurling = o.flag("beurling", false);
  if (o.has("ell")) vo.ell = build_base(parse_base(o.at("ell")));
  vo.rho = o.num("rho", 1.0);
  vo.K = static_cast<int>(o.integer("K", 256));
  const int probe = static_cast<int>(o.integer("liess_probe", 2));

  std::vector<ConditionReport> conditions;
  std::vector<VerdictReport> verdicts(settings.size());
  std::string subject;

  if (o.has("sequence")) {
    const WeightSequence M = build_sequence(parse_sequence(o.at("sequence")));
    o.done();
    subject = M.label();
    std::vector<std::vector<ConditionReport>> parts(5);
    parallel_for(parts.size() + settings.size(), threads, [&](std::size_t i) {
      switch (i) {
        case 0: {
          const GrowthIndices g = growth_indices(M);
          parts[0] = {g.dc, g.mg};
          return;
        }
        case 1: parts[1] = {base_sequence_check(k), lacunary_ratio(M, k)}; return;
        case 2: parts[2] = {analytic_inclusion_index(M)}; return;
        case 3: parts[3] = liess_report(M, probe); return;
        case 4: {
          const AlbanoReport a = albano_check(M);
          parts[4] = {a.albano, a.albano2, a.mg_special};
          return;
        }
        default: verdicts[i - 5] = equality_verdict(M, k, settings[i - 5], vo);
      }
    });
    for (auto& p : parts) conditions.insert(conditions.end(), p.begin(), p.end());
  } else {
    const WeightFunction w(parse_weight_function(o.at("omega")));
    o.done();
    subject = w.label();
    WeightFunctionValidity v;
    ConditionReport ommg;
    parallel_for(2 + settings.size(), threads, [&](std::size_t i) {
      if (i == 0) v = validate(w);
      else if (i == 1) ommg = ommg_check(w, vo.rho, vo.K);
      else verdicts[i - 2] = equality_verdict(w, k, settings[i - 2], vo);
    });
    conditions = {v.zero_at_origin, v.monotone, v.convex_phi, v.log_little_o, v.doubling, ommg};
  }

  JobOutcome out;
  out.report["command"] = "check";
  out.report["subject"] = subject;
  Json c = Json::array();
  for (const auto& r : conditions) c.push_back(to_json(r));
  out.report["conditions"] = std::move(c);
  Json v = Json::array();
  int failed = 0;
  for (const auto& r : verdicts) {
    v.push_back(to_json(r));
    failed += r.failed();
  }
  out.report["verdicts"] = std::move(v);

  CsvWriter csv({"setting", "verdict", "failed_check", "witness", "K"});
  for (const auto& r : verdicts) {
    std::string wit;
    for (std::size_t i = 0; i < r.witness.size(); ++i) wit += (i ? " " : "") + std::to_string(r.witness[i]);
    csv.cell(r.setting).cell(r.verdict).cell(r.failed_check).cell(wit).cell(static_cast<long long>(r.K));
    csv.end_row();
  }
  out.csv = csv.str();
  out.extra_files.emplace_back("conditions.csv", conditions_csv(conditions));
  out.exit_code = failed ? kExitHypothesis : kExitOk;
  out.message = "check " + subject + ": " + std::to_string(verdicts.size() - failed) + "/" +
                std::to_string(verdicts.size()) + " settings without failing hypotheses";
  return out;
}

// --- conjugate --------------------------------------------------------------

std::vector<double> grid(const Json& j) {
  if (j.is_array()) return number_list(j, "s");
  Fields g(j, "s");
  const double a = g.num("from"), b = g.num("to");
  const long long n = g.integer("count");
  g.done();
  if (n < 1 || n > 1000000) throw InputError("s.count must be in [1, 1e6]");
  std::vector<double> out;
  for (long long i = 0; i < n; ++i) out.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(i) / (n - 1));
  return out;
}

JobOutcome run_conjugate(Fields& o, int threads) {
  const WeightFunction w(parse_weight_function(o.at("omega")));
  const std::vector<double> s = o.has("s") ? grid(o.at("s")) : std::vector<double>{};
  const std::vector<double> rhos = o.has("rho") ? number_list(o.at("rho"), "rho") : std::vector<double>{};
  const int K = static_cast<int>(o.integer("K", 64));
  std::optional<Json> abs_spec, ommg_spec;
  if (o.has("absorption")) abs_spec = o.at("absorption");
  if (o.has("ommg")) ommg_spec = o.at("ommg");
  o.done();

  std::vector<double> phi(s.size()), arg(s.size());
  std::vector<AssociatedSequence> seqs(rhos.size());
  WeightFunctionValidity valid;
  parallel_for(1 + s.size() + rhos.size(), threads, [&](std::size_t i) {
    if (i == 0) {
      valid = validate(w);
    } else if (i <= s.size()) {
      phi[i - 1] = conjugate(w, s[i - 1]);
      arg[i - 1] = conjugate_argmax(w, s[i - 1]);
    } else {
      seqs[i - 1 - s.size()] = associated_sequence(w, rhos[i - 1 - s.size()], K);
    }
  });

  JobOutcome out;
  out.report["command"] = "conjugate";
  out.report["omega"] = to_json(w.spec());
  out.report["label"] = w.label();
  out.report["validity"] = to_json(valid);
  Json table = Json::array();
  CsvWriter csv({"s", "phi_star", "argmax"});
  for (std::size_t i = 0; i < s.size(); ++i) {
    table.push_back(Json{{"s", number(s[i])}, {"phi_star", number(phi[i])}, {"argmax", number(arg[i])}});
    csv.cell(s[i]).cell(phi[i]).cell(arg[i]);
    csv.end_row();
  }
  out.report["conjugate"] = std::move(table);
  Json as = Json::array();
  for (const auto& a : seqs) {
    Json l = Json::array();
    for (double x : a.logM) l.push_back(number(x));
    as.push_back(Json{{"rho", number(a.rho)}, {"shift", number(a.shift)}, {"logM", std::move(l)}});
  }
  out.report["associated"] = std::move(as);
  bool failed = !valid.ok();
  if (abs_spec) {
    Fields a(*abs_spec, "absorption");
    const double sigma = a.num("sigma"), rho = a.num("rho", 1.0), H_max = a.num("H_max", 1 << 20);
    const int aK = static_cast<int>(a.integer("K", K));
    a.done();
    out.report["absorption"] = to_json(bmt_absorption(w, sigma, rho, aK, H_max));
  }
  if (ommg_spec) {
    Fields a(*ommg_spec, "ommg");
    const double rho = a.num("rho", 1.0);
    const int aK = static_cast<int>(a.integer("K", K));
    a.done();
    const ConditionReport r = ommg_check(w, rho, aK);
    failed = failed || r.failed();
    out.report["ommg"] = to_json(r);
  }
  out.csv = csv.str();
  out.exit_code = failed ? kExitHypothesis : kExitOk;
  out.message = "conjugate " + w.label() + (failed ? ": a weight-function condition fails" : ": ok");
  return out;
}

// --- propagate ------------------------------------------------------------

JobOutcome run_propagate(Fields& o) {
  const std::string regime = o.text("regime");
  LacunaryInput in;
  in.M = build_sequence(parse_sequence(o.at("sequence")));
  if (o.has("mprime")) in.Mprime = build_sequence(parse_sequence(o.at("mprime")));
  in.k = build_base(parse_base(o.at("base")));
  in.C = o.num("C", 1.0);
  in.rho = o.num("rho", 1.0);
  in.n = static_cast<int>(o.integer("n", 1));
  if (o.has("log_bounds")) in.log_bounds = number_list(o.at("log_bounds"), "log_bounds");
  std::optional<int> L;
  if (o.has("L")) L = static_cast<int>(o.integer("L"));
  const bool beurling = o.flag("beurling", false);

  BoundCertificate c;
  if (regime == "global") {
    o.done();
    c = propagate_global(in, L);
  } else if (regime == "local") {
    const double cg = o.num("C_geom");
    o.done();
    c = propagate_local(in, L, cg, beurling);
  } else if (regime == "moment") {
    const double sigma = o.num("sigma", in.rho);
    o.done();
    c = propagate_moment(in, L, sigma);
  } else if (regime == "interval_cg") {
    const double len = o.num("interval_len", 2.0);
    std::optional<double> target;
    if (o.has("sigma_target")) target = o.num("sigma_target");
    o.done();
    c = propagate_interval_cg(in, L, len, beurling, target);
  } else {
    throw InputError("propagate: unknown regime '" + regime + "'");
  }

  JobOutcome out;
  out.report["command"] = "propagate";
  out.report["sequence"] = in.M.label();
  out.report["certificate"] = to_json(c);
  out.csv = certificate_csv(c);
  out.message = std::string("propagate ") + to_string(c.regime) + ": C_out=" + shortest(c.C_out) +
                " rho_out=" + shortest(c.rho_out) + " up to L=" + std::to_string(c.L);
  return out;
}

// --- verify ---------------------------------------------------------------

JobOutcome run_verify(Fields& o, int threads) {
  std::vector<FunctionSpec> corpus;
  if (o.has("corpus") == o.has("function")) throw InputError("verify: give exactly one of 'corpus' or 'function'");
  if (o.has("corpus")) {
    const Json& c = o.at("corpus");
    if (!c.is_array() || c.empty()) throw InputError("verify.corpus: expected a nonempty array");
    for (const auto& f : c) corpus.push_back(parse_function(f));
  } else {
    corpus.push_back(parse_function(o.at("function")));
  }
  std::vector<InequalityKind> kinds;
  const char* kk = o.has("kinds") ? "kinds" : "kind";
  for (const auto& s : text_list(o.at(kk), kk)) kinds.push_back(parse_kind(s));
  const std::vector<double> ps = o.has("p") ? number_list(o.at("p"), "p") : std::vector<double>{kInfNorm};
  const int m_max = static_cast<int>(o.integer("m_max", 12));
  if (m_max < 2 || m_max > SampledFunction::kMaxOrder) throw InputError("verify.m_max must be in [2, 64]");
  VerifyParams base;
  if (o.has("interval")) {
    const auto iv = number_list(o.at("interval"), "interval");
    if (iv.size() != 2 || !(iv[0] < iv[1])) throw InputError("verify.interval: expected [lo, hi] with lo < hi");
    base.interval = {iv[0], iv[1]};
  }
  if (o.has("geometry")) {
    Fields g(o.at("geometry"), "geometry");
    base.geometry.a = g.num("a", base.geometry.a);
    base.geometry.dist = g.num("dist", base.geometry.dist);
    base.geometry.n = static_cast<int>(g.integer("n", base.geometry.n));
    base.geometry.C_taylor = g.num("C_taylor", base.geometry.C_taylor);
    base.geometry.C_mixed = g.num("C_mixed", base.geometry.C_mixed);
    g.done();
  }
  base.geometry.interval_len = base.interval.length();
  base.tol_discretization = o.num("tol_discretization", base.tol_discretization);
  if (o.has("norm_options")) {
    Fields g(o.at("norm_options"), "norm_options");
    base.norm_options.rel_tol = g.num("rel_tol", base.norm_options.rel_tol);
    base.norm_options.initial_intervals = static_cast<int>(g.integer("initial_intervals", 256));
    base.norm_options.max_doublings = static_cast<int>(g.integer("max_doublings", 20));
    g.done();
  }
  o.done();

  struct Task {
    std::size_t f;
    InequalityKind kind;
    double p;
  };
  std::vector<Task> tasks;
  for (std::size_t f = 0; f < corpus.size(); ++f)
    for (InequalityKind kind : kinds)
      for (double p : ps) {
        if (kind != InequalityKind::lk && std::isfinite(p)) continue;  // sup-norm statements only
        tasks.push_back({f, kind, p});
      }
  if (tasks.empty()) throw InputError("verify: no (function, kind, p) combination applies");

  std::vector<SampledFunction> fns;
  for (const auto& f : corpus) fns.push_back(make_function(f));
  std::vector<std::vector<MarginReport>> results(tasks.size());
  parallel_for(tasks.size(), threads, [&](std::size_t i) {
    const Task& t = tasks[i];
    VerifyParams p = base;
    p.p = t.p;
    const NormTable table = norm_table(fns[t.f], t.kind, p, m_max);
    for (int m = 2; m <= m_max; ++m)
      for (int j = 1; j < m; ++j) {
        p.j = j;
        p.m = m;
        results[i].push_back(verify_from_table(table, t.kind, p));
      }
  });

  std::vector<MarginReport> rows;
  for (auto& r : results) rows.insert(rows.end(), r.begin(), r.end());
  long long violations = 0, skipped = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  for (const auto& r : rows) {
    if (r.skipped) {
      ++skipped;
      continue;
    }
    violations += !r.pass;
    min_margin = std::min(min_margin, r.margin);
  }

  JobOutcome out;
  out.report["command"] = "verify";
  out.report["summary"] = Json{{"cases", static_cast<long long>(rows.size())},
                               {"violations", violations},
                               {"skipped", skipped},
                               {"min_margin", number(min_margin)}};
  Json m = Json::array();
  for (const auto& r : rows) m.push_back(to_json(r));
  out.report["margins"] = std::move(m);
  out.csv = margins_csv(rows);
  out.exit_code = violations ? kExitHypothesis : kExitOk;
  out.message = "verify: " + std::to_string(rows.size()) + " cases, " + std::to_string(violations) +
                " violations, " + std::to_string(skipped) + " skipped, min margin " + shortest(min_margin);
  return out;
}

// --- construct ------------------------------------------------------------

JobOutcome run_construct(Fields& o) {
  CounterexampleWitness w;
  const bool load = o.has("witness");
  std::string witness_file = o.text("witness_file", "");
  if (load) {
    w = parse_witness(o.at("witness"));
  } else {
    const FamilySpec fam = parse_family(o.at("family"));
    const int jmax = static_cast<int>(o.integer("jmax", 6));
    ConstructOptions opt;
    if (o.has("options")) {
      Fields g(o.at("options"), "options");
      opt.index_ceiling_bits = static_cast<int>(g.integer("index_ceiling_bits", opt.index_ceiling_bits));
      opt.exact_power_bits = static_cast<int>(g.integer("exact_power_bits", opt.exact_power_bits));
      opt.linear_scan = g.integer("linear_scan", opt.linear_scan);
      g.done();
    }
    o.done();
    w = build_counterexample(fam, jmax, opt);
  }
  if (load) o.done();

  const ConditionReport v = verify_counterexample(w);
  const ConditionReport mn = minimality_check(w);
  JobOutcome out;
  out.report["command"] = "construct";
  out.report["witness"] = to_json(w);
  out.report["verification"] = to_json(v);
  out.report["minimality"] = to_json(mn);
  CsvWriter csv({"j", "ell", "k", "log2_N_ell", "log2_N_k", "log2_nu_ell", "log2_nu_k"});
  for (int j = 0; j < w.jmax; ++j) {
    csv.cell(j + 1).cell(w.ell[j]).cell(w.k[j]).cell(w.logN2_ell[j]).cell(w.logN2_k[j]);
    csv.cell(w.logNu2_ell[j]).cell(w.logNu2_k[j]);
    csv.end_row();
  }
  out.csv = csv.str();
  if (!witness_file.empty()) {
    if (witness_file.find('/') != std::string::npos) throw InputError("witness_file must be a plain file name");
    out.extra_files.emplace_back(witness_file, dump(to_json(w)));
  }
  const bool failed = v.failed() || mn.failed();
  out.exit_code = failed ? kExitHypothesis : kExitOk;
  out.message = "construct jmax=" + std::to_string(w.jmax) + ": " + (failed ? v.failed() ? v.note : mn.note : v.note);
  return out;
}

// --- sweep ----------------------------------------------------------------

JobOutcome run_sweep(Fields& o, int threads) {
  const Json& tmpl = o.at("job");
  if (!tmpl.is_object()) throw InputError("sweep.job: expected an object");
  if (tmpl.contains("command") && tmpl["command"] == "sweep") throw InputError("sweep.job: nested sweeps are refused");
  const std::string param = o.text("parameter");
  const Json& values = o.at("values");
  if (!values.is_array() || values.empty()) throw InputError("sweep.values: expected a nonempty array");
  o.done();
  Json::json_pointer ptr;
  try {
    ptr = Json::json_pointer(param);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("sweep.parameter: '" + param + "' is not a JSON pointer");
  }

  std::vector<Json> jobs;
  for (const auto& v : values) {
    Json j = tmpl;
    try {
      j[ptr] = v;
    } catch (const nlohmann::json::exception& e) {
      throw InputError("sweep.parameter: cannot set '" + param + "' in the template");
    }
    j.erase("output");
    jobs.push_back(std::move(j));
  }
  std::vector<JobOutcome> runs(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t i) { runs[i] = execute(jobs[i], 1); });

  JobOutcome out;
  out.report["command"] = "sweep";
  out.report["parameter"] = param;
  Json r = Json::array();
  CsvWriter csv({"value", "exit_code", "message"});
  for (std::size_t i = 0; i < runs.size(); ++i) {
    r.push_back(Json{{"value", values[i]}, {"exit_code", runs[i].exit_code}, {"report", runs[i].report}});
    csv.cell(values[i].is_string() ? values[i].get<std::string>() : values[i].dump());
    csv.cell(runs[i].exit_code).cell(runs[i].message);
    csv.end_row();
    out.exit_code = std::max(out.exit_code, runs[i].exit_code);
  }
  out.report["runs"] = std::move(r);
  out.csv = csv.str();
  out.message = "sweep over " + param + ": " + std::to_string(runs.size()) + " runs, worst exit " +
                std::to_string(out.exit_code);
  return out;
}

}  // namespace

JobOutcome execute(const Json& job, int threads) {
  Fields o(job, "job");
  const std::string command = o.text("command");
  if (o.has("output")) {
    Fields out(o.at("output"), "output");
    out.text("path", "");
    const std::string fmt = out.text("format", "json");
    if (fmt != "json" && fmt != "csv") throw InputError("output.format must be json or csv");
    out.done();
  }
  try {
    if (command == "check") return run_check(o, threads);
    if (command == "conjugate") return run_conjugate(o, threads);
    if (command == "propagate") return run_propagate(o);
    if (command == "verify") return run_verify(o, threads);
    if (command == "construct") return run_construct(o);
    if (command == "sweep") return run_sweep(o, threads);
  } catch (const HypothesisError& e) {
    return failure(command, "hypothesis-fails", e.what(), e.witness());
  } catch (const NumericalError& e) {
    return failure(command, "numerical-error", e.what());
  }
  throw InputError("unknown command '" + command + "'");
}

int run_job_file(const std::filesystem::path& path, const RunOptions& opt, std::ostream& err) {
  try {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read job file " + path.string());
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const Json job = parse_json_text(text, path.string());
    if (!job.is_object()) throw InputError(path.string() + ": job must be a JSON object");

    std::string fmt = "json";
    std::string name;
    if (job.contains("output") && job["output"].is_object()) {
      const Json& o = job["output"];
      if (o.contains("format") && o["format"].is_string()) fmt = o["format"].get<std::string>();
      if (o.contains("path") && o["path"].is_string()) name = o["path"].get<std::string>();
    }
    JobOutcome r = execute(job, opt.threads);
    if (name.empty()) name = job.value("command", std::string("report")) + "." + fmt;

    std::filesystem::create_directories(opt.out_dir);
    auto write = [&](const std::filesystem::path& p, const std::string& s) {
      std::ofstream f(opt.out_dir / p, std::ios::binary | std::ios::trunc);
      if (!f) throw InputError("cannot write " + (opt.out_dir / p).string());
      f << s;
    };
    write(name, fmt == "csv" ? r.csv : dump(r.report));
    for (const auto& [file, contents] : r.extra_files) write(file, contents);
    if (!r.message.empty()) err << r.message << "\n";
    return r.exit_code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const HypothesisError& e) {
    err << "hypothesis fails: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitHypothesis;
  }
}

// --- seed check -----------------------------------------------------------

std::vector<std::pair<std::string, bool>> seed_check(int threads) {
  std::vector<std::pair<std::string, bool>> out;
  auto item = [&](const std::string& name, const std::function<bool()>& f) {
    bool ok = false;
    try {
      ok = f();
    } catch (const std::exception&) {
      ok = false;
    }
    out.emplace_back(name, ok);
  };
  const double pi = std::acos(-1.0);

  item("favard_and_kolmogorov", [&] {
    return std::abs(favard(0) - 1.0) < 1e-10 && std::abs(favard(1) - pi / 2) < 1e-10 &&
           std::abs(favard(2) - pi * pi / 8) < 1e-10 && std::abs(kolmogorov_constant(2, 1) - std::sqrt(2.0)) < 1e-10;
  });
  item("polarization", [&] {
    FunctionSpec s;
    s.kind = FunctionSpec::Kind::poly;
    s.dimension = 2;
    s.coeffs[{2, 1}] = 1.0;
    s.coeffs[{0, 3}] = -2.0;
    const SampledFunction f = make_function(s);
    const int alpha[] = {2, 1};
    const double x[] = {0.3, -0.7};
    return std::abs(polarization_reconstruct(f, alpha, x) - f.partial(alpha, x)) < 1e-9;
  });
  item("legendre_linear", [&] {
    const WeightFunction w(WeightFunctionSpec{});
    const AssociatedSequence a = associated_sequence(w, 1.0, 16);
    for (int k = 1; k <= 16; ++k)
      if (std::abs(a.logM[k] - k * (std::log(static_cast<double>(k)) - 1.0)) > 1e-8 * (1.0 + std::abs(a.logM[k])))
        return false;
    return true;
  });
  item("propagation_constants", [&] {
    LacunaryInput in;
    in.M = WeightSequence::gevrey(1.0, 64);
    in.k = BaseSequence::linear(2, 64);
    const BoundCertificate c = propagate_global(in);
    return std::abs(c.C_out - 2.0) < 1e-12 && std::abs(c.rho_out - 4.0 * std::exp(1.0)) < 1e-9;
  });
  item("verdict_dichotomy", [&] {
    const WeightSequence M = WeightSequence::gevrey(2.0, 512);
    return equality_verdict(M, BaseSequence::linear(2, 512), Setting::B_Lp).applies() &&
           equality_verdict(M, BaseSequence::double_exponential(512), Setting::B_Lp).failed();
  });
  item("construct_first_step", [&] {
    const CounterexampleWitness w = build_counterexample(FamilySpec{}, 1);
    return w.ell[0] == "1" && w.k[0] == "4" && !verify_counterexample(w).failed();
  });
  item("thread_determinism", [&] {
    const Json job = Json::parse(R"({"command":"verify","corpus":[{"kind":"sin"},{"kind":"gaussian"}],
      "kinds":["lk","cg"],"p":[2,"inf"],"m_max":6})");
    return dump(execute(job, 1).report) == dump(execute(job, std::max(2, threads)).report);
  });
  return out;
}

}  // namespace ultraweights
