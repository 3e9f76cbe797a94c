#pragma once

// JSON for specs and reports, plus the CSV writers. Non-finite numbers are
// written as the strings "inf", "-inf", "nan" and read back the same way.
// Unknown keys in specs are rejected.

#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ultraweights/construct.hpp"
#include "ultraweights/interp.hpp"
#include "ultraweights/lacunary.hpp"
#include "ultraweights/report.hpp"
#include "ultraweights/specs.hpp"
#include "ultraweights/weightfn.hpp"
#include "ultraweights/weightseq.hpp"

namespace ultraweights {

using Json = nlohmann::ordered_json;

Json number(double x);
double to_number(const Json& j, const std::string& where);

/// Reads one JSON object and remembers which keys were consumed, so that
/// done() can reject leftovers as unknown.
class Fields {
 public:
  Fields(const Json& j, std::string where);

  bool has(const std::string& k) const { return j_.contains(k); }
  const Json& at(const std::string& k);
  double num(const std::string& k);
  double num(const std::string& k, double def) { return has(k) ? num(k) : def; }
  long long integer(const std::string& k);
  long long integer(const std::string& k, long long def) { return has(k) ? integer(k) : def; }
  std::string text(const std::string& k);
  std::string text(const std::string& k, const std::string& def) { return has(k) ? text(k) : def; }
  bool flag(const std::string& k, bool def);
  void done() const;
  const std::string& where() const noexcept { return where_; }

 private:
  const Json& j_;
  std::string where_;
  std::set<std::string> used_;
};

WeightFunctionSpec parse_weight_function(const Json& j);
SequenceSpec parse_sequence(const Json& j);
BaseSpec parse_base(const Json& j);
FunctionSpec parse_function(const Json& j);
FamilySpec parse_family(const Json& j);
CounterexampleWitness parse_witness(const Json& j);

Json to_json(const WeightFunctionSpec& s);
Json to_json(const SequenceSpec& s);
Json to_json(const BaseSpec& s);
Json to_json(const FunctionSpec& s);
Json to_json(const FamilySpec& s);

Json to_json(const ConditionReport& r);
Json to_json(const VerdictReport& r);
Json to_json(const BoundCertificate& c);
Json to_json(const MarginReport& r);
Json to_json(const CounterexampleWitness& w);
Json to_json(const Absorption& a);
Json to_json(const WeightFunctionValidity& v);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  CsvWriter& cell(const std::string& s);
  CsvWriter& cell(double x);
  CsvWriter& cell(long long x);
  CsvWriter& cell(int x) { return cell(static_cast<long long>(x)); }
  CsvWriter& cell(bool b);
  void end_row();
  const std::string& str() const noexcept { return out_; }

 private:
  std::size_t columns_;
  std::size_t in_row_ = 0;
  std::string out_;
};

std::string margins_csv(const std::vector<MarginReport>& rows);
std::string certificate_csv(const BoundCertificate& c);
std::string conditions_csv(const std::vector<ConditionReport>& rows);

}  // namespace ultraweights
