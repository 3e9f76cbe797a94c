#include "ultraweights/serialize.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "ultraweights/errors.hpp"

namespace ultraweights {

namespace {

std::vector<double> numbers(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(to_number(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::string> big_indices(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (e.is_string()) out.push_back(e.get<std::string>());
    else if (e.is_number_unsigned() || e.is_number_integer()) out.push_back(std::to_string(e.get<long long>()));
    else throw InputError(where + ": expected decimal strings or integers");
  }
  return out;
}

std::vector<std::string> strings(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InputError(where + ": expected strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Json pairs(const std::vector<std::pair<std::string, double>>& v) {
  Json o = Json::object();
  for (const auto& [k, x] : v) o[k] = number(x);
  return o;
}

Json indices(const std::vector<long long>& v) {
  Json a = Json::array();
  for (long long x : v) a.push_back(x);
  return a;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json number(double x) {
  if (std::isfinite(x)) return x;
  return shortest(x);
}

double to_number(const Json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw InputError(where + ": expected a number");
}

Fields::Fields(const Json& j, std::string where) : j_(j), where_(std::move(where)) {
  if (!j.is_object()) throw InputError(where_ + ": expected an object");
}

const Json& Fields::at(const std::string& k) {
  used_.insert(k);
  if (!j_.contains(k)) throw InputError(where_ + ": missing key '" + k + "'");
  return j_.at(k);
}

double Fields::num(const std::string& k) { return to_number(at(k), where_ + "." + k); }

long long Fields::integer(const std::string& k) {
  const Json& v = at(k);
  if (v.is_number_integer()) return v.get<long long>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::floor(d) == d && std::abs(d) < 9e15) return static_cast<long long>(d);
  }
  throw InputError(where_ + "." + k + ": expected an integer");
}

std::string Fields::text(const std::string& k) {
  const Json& v = at(k);
  if (!v.is_string()) throw InputError(where_ + "." + k + ": expected a string");
  return v.get<std::string>();
}

bool Fields::flag(const std::string& k, bool def) {
  if (!has(k)) return def;
  const Json& v = at(k);
  if (!v.is_boolean()) throw InputError(where_ + "." + k + ": expected true or false");
  return v.get<bool>();
}

void Fields::done() const {
  for (auto it = j_.begin(); it != j_.end(); ++it)
    if (!used_.count(it.key())) throw InputError(where_ + ": unknown key '" + it.key() + "'");
}

// --- specs ----------------------------------------------------------------

WeightFunctionSpec parse_weight_function(const Json& j) {
  Fields o(j, "omega");
  WeightFunctionSpec s;
  const std::string kind = o.text("kind");
  if (kind == "linear") {
    s.kind = WeightFunctionSpec::Kind::linear;
  } else if (kind == "power") {
    s.kind = WeightFunctionSpec::Kind::power;
    s.param = o.num("a");
  } else if (kind == "log_power") {
    s.kind = WeightFunctionSpec::Kind::log_power;
    s.param = o.num("s");
  } else if (kind == "t_over_log") {
    s.kind = WeightFunctionSpec::Kind::t_over_log;
  } else {
    throw InputError("omega: unknown kind '" + kind + "'");
  }
  s.normalized = o.flag("normalized", false);
  o.done();
  return s;
}

SequenceSpec parse_sequence(const Json& j) {
  Fields o(j, "sequence");
  SequenceSpec s;
  const std::string kind = o.text("kind");
  s.label = o.text("label", "");
  if (kind == "gevrey" || kind == "factorial_power") {
    s.kind = kind == "gevrey" ? SequenceSpec::Kind::gevrey : SequenceSpec::Kind::factorial_power;
    s.s = o.num("s", 1.0);
    s.K = static_cast<int>(o.integer("K", kDefaultTruncation));
  } else if (kind == "table") {
    s.kind = SequenceSpec::Kind::table;
    if (o.has("logM") == o.has("M")) throw InputError("sequence: table needs exactly one of 'logM' or 'M'");
    s.table_is_log = o.has("logM");
    s.table = numbers(o.at(s.table_is_log ? "logM" : "M"), "sequence.table");
    s.K = static_cast<int>(s.table.size()) - 1;
  } else if (kind == "from_omega") {
    s.kind = SequenceSpec::Kind::from_omega;
    s.omega = parse_weight_function(o.at("omega"));
    s.rho = o.num("rho", 1.0);
    s.K = static_cast<int>(o.integer("K", kDefaultTruncation));
  } else {
    throw InputError("sequence: unknown kind '" + kind + "'");
  }
  o.done();
  return s;
}

BaseSpec parse_base(const Json& j) {
  Fields o(j, "base");
  BaseSpec s;
  const std::string kind = o.text("kind");
  s.max_order = o.integer("max_order", 512);
  if (kind == "linear") {
    s.kind = BaseSpec::Kind::linear;
    s.step = o.integer("step", 1);
  } else if (kind == "geometric") {
    s.kind = BaseSpec::Kind::geometric;
    s.step = o.integer("b", 2);
  } else if (kind == "double_exponential") {
    s.kind = BaseSpec::Kind::double_exponential;
  } else if (kind == "list") {
    s.kind = BaseSpec::Kind::list;
    const Json& k = o.at("k");
    if (!k.is_array()) throw InputError("base.k: expected an array");
    for (const auto& e : k) {
      if (!e.is_number_integer()) throw InputError("base.k: expected integers");
      s.list.push_back(e.get<long long>());
    }
  } else {
    throw InputError("base: unknown kind '" + kind + "'");
  }
  o.done();
  return s;
}

FunctionSpec parse_function(const Json& j) {
  Fields o(j, "function");
  FunctionSpec f;
  using K = FunctionSpec::Kind;
  const std::string kind = o.text("kind");
  if (kind == "sin") f.kind = K::sin;
  else if (kind == "monomial") f.kind = K::monomial, f.m = static_cast<int>(o.integer("m", 1));
  else if (kind == "gaussian") f.kind = K::gaussian;
  else if (kind == "geometric") f.kind = K::geometric, f.c = o.num("c", 0.5);
  else if (kind == "lacunary_trig") {
    f.kind = K::lacunary_trig;
    f.b = o.num("b", 2.0);
    f.s = o.num("s", 1.5);
    f.terms = static_cast<int>(o.integer("terms", 6));
  } else if (kind == "sech") f.kind = K::sech;
  else if (kind == "gauss_cos") f.kind = K::gauss_cos, f.c = o.num("c", 1.0);
  else if (kind == "poly") {
    f.kind = K::poly;
    const Json& c = o.at("coeffs");
    if (!c.is_object() || c.empty()) throw InputError("function.coeffs: expected a nonempty object");
    std::size_t dim = 0;
    for (auto it = c.begin(); it != c.end(); ++it) {
      std::vector<int> alpha;
      std::stringstream ss(it.key());
      std::string part;
      while (std::getline(ss, part, ',')) {
        try {
          std::size_t used = 0;
          const int a = std::stoi(part, &used);
          if (used != part.size() || a < 0) throw std::invalid_argument(part);
          alpha.push_back(a);
        } catch (const std::exception&) {
          throw InputError("function.coeffs: key '" + it.key() + "' is not a comma-separated exponent list");
        }
      }
      if (alpha.empty() || (dim != 0 && alpha.size() != dim))
        throw InputError("function.coeffs: exponent lists must share one length");
      dim = alpha.size();
      f.coeffs[alpha] += to_number(it.value(), "function.coeffs");
    }
    f.dimension = static_cast<int>(dim);
  } else {
    throw InputError("function: unknown kind '" + kind + "'");
  }
  f.amplitude = o.num("amplitude", 1.0);
  f.dilation = o.num("dilation", 1.0);
  o.done();
  return f;
}

FamilySpec parse_family(const Json& j) {
  Fields o(j, "family");
  FamilySpec f;
  const std::string kind = o.text("kind");
  if (kind == "gevrey_family") {
    f.kind = FamilySpec::Kind::gevrey_family;
  } else if (kind == "from_omega_family") {
    f.kind = FamilySpec::Kind::from_omega_family;
    f.omega = parse_weight_function(o.at("omega"));
  } else {
    throw InputError("family: unknown kind '" + kind + "'");
  }
  o.done();
  return f;
}

CounterexampleWitness parse_witness(const Json& j) {
  Fields o(j, "witness");
  CounterexampleWitness w;
  w.jmax = static_cast<int>(o.integer("jmax"));
  w.family = parse_family(o.at("family"));
  w.k = big_indices(o.at("k"), "witness.k");
  w.ell = big_indices(o.at("ell"), "witness.ell");
  Fields n(o.at("logN2"), "witness.logN2");
  w.logN2_k = strings(n.at("k"), "witness.logN2.k");
  w.logN2_ell = strings(n.at("ell"), "witness.logN2.ell");
  n.done();
  Fields nu(o.at("logNu2"), "witness.logNu2");
  w.logNu2_k = strings(nu.at("k"), "witness.logNu2.k");
  w.logNu2_ell = strings(nu.at("ell"), "witness.logNu2.ell");
  nu.done();
  o.done();
  return w;
}

Json to_json(const WeightFunctionSpec& s) {
  Json o;
  switch (s.kind) {
    case WeightFunctionSpec::Kind::linear: o["kind"] = "linear"; break;
    case WeightFunctionSpec::Kind::power: o["kind"] = "power", o["a"] = number(s.param); break;
    case WeightFunctionSpec::Kind::log_power: o["kind"] = "log_power", o["s"] = number(s.param); break;
    case WeightFunctionSpec::Kind::t_over_log: o["kind"] = "t_over_log"; break;
  }
  if (s.normalized) o["normalized"] = true;
  return o;
}

Json to_json(const SequenceSpec& s) {
  Json o;
  switch (s.kind) {
    case SequenceSpec::Kind::gevrey:
    case SequenceSpec::Kind::factorial_power:
      o["kind"] = s.kind == SequenceSpec::Kind::gevrey ? "gevrey" : "factorial_power";
      o["s"] = number(s.s);
      o["K"] = s.K;
      break;
    case SequenceSpec::Kind::table: {
      o["kind"] = "table";
      Json a = Json::array();
      for (double x : s.table) a.push_back(number(x));
      o[s.table_is_log ? "logM" : "M"] = std::move(a);
      break;
    }
    case SequenceSpec::Kind::from_omega:
      o["kind"] = "from_omega";
      o["omega"] = to_json(s.omega);
      o["rho"] = number(s.rho);
      o["K"] = s.K;
      break;
  }
  if (!s.label.empty()) o["label"] = s.label;
  return o;
}

Json to_json(const BaseSpec& s) {
  Json o;
  switch (s.kind) {
    case BaseSpec::Kind::list: o["kind"] = "list", o["k"] = indices(s.list); return o;
    case BaseSpec::Kind::linear: o["kind"] = "linear", o["step"] = s.step; break;
    case BaseSpec::Kind::geometric: o["kind"] = "geometric", o["b"] = s.step; break;
    case BaseSpec::Kind::double_exponential: o["kind"] = "double_exponential"; break;
  }
  o["max_order"] = s.max_order;
  return o;
}

Json to_json(const FunctionSpec& f) {
  using K = FunctionSpec::Kind;
  Json o;
  switch (f.kind) {
    case K::sin: o["kind"] = "sin"; break;
    case K::monomial: o["kind"] = "monomial", o["m"] = f.m; break;
    case K::gaussian: o["kind"] = "gaussian"; break;
    case K::geometric: o["kind"] = "geometric", o["c"] = number(f.c); break;
    case K::lacunary_trig:
      o["kind"] = "lacunary_trig", o["b"] = number(f.b), o["s"] = number(f.s), o["terms"] = f.terms;
      break;
    case K::sech: o["kind"] = "sech"; break;
    case K::gauss_cos: o["kind"] = "gauss_cos", o["c"] = number(f.c); break;
    case K::poly: {
      o["kind"] = "poly";
      Json c = Json::object();
      for (const auto& [alpha, v] : f.coeffs) {
        std::string key;
        for (std::size_t i = 0; i < alpha.size(); ++i) key += (i ? "," : "") + std::to_string(alpha[i]);
        c[key] = number(v);
      }
      o["coeffs"] = std::move(c);
      break;
    }
  }
  if (f.amplitude != 1.0) o["amplitude"] = number(f.amplitude);
  if (f.dilation != 1.0) o["dilation"] = number(f.dilation);
  return o;
}

Json to_json(const FamilySpec& f) {
  Json o;
  if (f.kind == FamilySpec::Kind::gevrey_family) {
    o["kind"] = "gevrey_family";
  } else {
    o["kind"] = "from_omega_family";
    o["omega"] = to_json(f.omega);
  }
  return o;
}

// --- reports --------------------------------------------------------------

Json to_json(const ConditionReport& r) {
  Json o;
  o["name"] = r.name;
  o["index_value"] = number(r.index_value);
  o["verdict"] = to_string(r.verdict);
  o["witness"] = indices(r.witness);
  o["trend"] = r.trend ? Json(to_string(*r.trend)) : Json(nullptr);
  o["K"] = r.K;
  if (!r.note.empty()) o["note"] = r.note;
  if (!r.details.empty()) o["details"] = pairs(r.details);
  return o;
}

Json to_json(const VerdictReport& r) {
  Json o;
  o["setting"] = r.setting;
  o["verdict"] = r.verdict;
  o["failed_check"] = r.failed_check.empty() ? Json(nullptr) : Json(r.failed_check);
  o["witness"] = indices(r.witness);
  o["K"] = r.K;
  Json c = Json::array();
  for (const auto& x : r.checklist) c.push_back(to_json(x));
  o["checklist"] = std::move(c);
  if (!r.note.empty()) o["note"] = r.note;
  return o;
}

Json to_json(const BoundCertificate& c) {
  Json o;
  o["regime"] = to_string(c.regime);
  o["L"] = c.L;
  o["C_out"] = number(c.C_out);
  o["rho_out"] = number(c.rho_out);
  o["constants"] = pairs(c.constants);
  Json b = Json::array();
  for (double x : c.B) b.push_back(number(x));
  o["B"] = std::move(b);
  Json t = Json::array();
  for (const auto& s : c.chain_trace) {
    Json e;
    e["ell"] = s.ell;
    e["j"] = s.j;
    e["k_lo"] = s.k_lo;
    e["k_hi"] = s.k_hi;
    e["rule"] = s.rule;
    t.push_back(std::move(e));
  }
  o["chain_trace"] = std::move(t);
  return o;
}

Json to_json(const MarginReport& r) {
  Json o;
  o["function"] = r.function;
  o["kind"] = to_string(r.kind);
  o["j"] = r.j;
  o["m"] = r.m;
  o["p"] = number(r.p);
  o["lhs"] = number(r.lhs);
  o["bound"] = number(r.bound);
  o["margin"] = number(r.margin);
  o["tolerance"] = number(r.tolerance);
  o["pass"] = r.pass;
  o["skipped"] = r.skipped;
  if (!r.note.empty()) o["note"] = r.note;
  return o;
}

Json to_json(const CounterexampleWitness& w) {
  Json o;
  o["jmax"] = w.jmax;
  o["family"] = to_json(w.family);
  o["k"] = w.k;
  o["ell"] = w.ell;
  o["logN2"] = Json{{"k", w.logN2_k}, {"ell", w.logN2_ell}};
  o["logNu2"] = Json{{"k", w.logNu2_k}, {"ell", w.logNu2_ell}};
  return o;
}

Json to_json(const Absorption& a) {
  Json o;
  o["H"] = number(a.H);
  o["C"] = number(a.C);
  o["log_sup"] = number(a.log_sup);
  Json t = Json::array();
  for (const auto& s : a.trajectory)
    t.push_back(Json{{"H", number(s.H)}, {"log_sup", number(s.log_sup)}, {"log_tail_sup", number(s.log_tail_sup)},
                     {"stable", s.stable}});
  o["trajectory"] = std::move(t);
  return o;
}

Json to_json(const WeightFunctionValidity& v) {
  Json o;
  o["ok"] = v.ok();
  Json c = Json::array();
  for (const auto* r : {&v.zero_at_origin, &v.monotone, &v.convex_phi, &v.log_little_o, &v.doubling})
    c.push_back(to_json(*r));
  o["conditions"] = std::move(c);
  return o;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// --- csv ------------------------------------------------------------------

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  for (auto& h : header) cell(h);
  end_row();
}

CsvWriter& CsvWriter::cell(const std::string& s) {
  if (in_row_++) out_ += ',';
  out_ += csv_escape(s);
  return *this;
}

CsvWriter& CsvWriter::cell(double x) { return cell(shortest(x)); }
CsvWriter& CsvWriter::cell(long long x) { return cell(std::to_string(x)); }
CsvWriter& CsvWriter::cell(bool b) { return cell(std::string(b ? "true" : "false")); }

void CsvWriter::end_row() {
  if (in_row_ != columns_)
    throw Error("csv row has " + std::to_string(in_row_) + " cells, header has " + std::to_string(columns_));
  out_ += '\n';
  in_row_ = 0;
}

std::string margins_csv(const std::vector<MarginReport>& rows) {
  CsvWriter w({"function", "kind", "j", "m", "p", "lhs", "bound", "margin", "pass", "skipped", "tolerance"});
  for (const auto& r : rows) {
    w.cell(r.function).cell(std::string(to_string(r.kind))).cell(r.j).cell(r.m).cell(r.p).cell(r.lhs);
    w.cell(r.bound).cell(r.margin).cell(r.pass).cell(r.skipped).cell(r.tolerance);
    w.end_row();
  }
  return w.str();
}

std::string certificate_csv(const BoundCertificate& c) {
  CsvWriter w({"ell", "log_B", "j", "k_lo", "k_hi", "rule"});
  for (const auto& s : c.chain_trace) {
    w.cell(s.ell).cell(c.B[static_cast<std::size_t>(s.ell)]).cell(s.j).cell(s.k_lo).cell(s.k_hi).cell(s.rule);
    w.end_row();
  }
  return w.str();
}

std::string conditions_csv(const std::vector<ConditionReport>& rows) {
  CsvWriter w({"name", "index_value", "verdict", "trend", "K", "witness"});
  for (const auto& r : rows) {
    std::string wit;
    for (std::size_t i = 0; i < r.witness.size(); ++i) wit += (i ? " " : "") + std::to_string(r.witness[i]);
    w.cell(r.name).cell(r.index_value).cell(std::string(to_string(r.verdict)));
    w.cell(std::string(r.trend ? to_string(*r.trend) : "")).cell(r.K).cell(wit);
    w.end_row();
  }
  return w.str();
}

}  // namespace ultraweights
