#pragma once

// Plain input descriptions. They carry no behaviour; the modules turn them
// into evaluators (WeightFunction, WeightSequence, SampledFunction, ...).

#include <map>
#include <string>
#include <vector>

namespace ultraweights {

struct WeightFunctionSpec {
  enum class Kind {
    linear,      // t
    power,       // t^a, 0 < a <= 1
    log_power,   // max(0, ln t)^s, s > 1
    t_over_log,  // t / ln(e + t)
  };
  Kind kind = Kind::linear;
  double param = 1.0;       // a for power, s for log_power
  bool normalized = false;  // replace omega by max(0, omega - omega(1))
};

struct SequenceSpec {
  enum class Kind { gevrey, factorial_power, table, from_omega };
  Kind kind = Kind::gevrey;
  double s = 1.0;
  int K = 512;
  std::vector<double> table;  // values M_j, or ln M_j when table_is_log
  bool table_is_log = true;
  WeightFunctionSpec omega;
  double rho = 1.0;
  std::string label;
};

struct BaseSpec {
  enum class Kind { list, linear, geometric, double_exponential };
  Kind kind = Kind::linear;
  std::vector<long long> list;
  long long step = 1;  // linear: k_j = step * j; geometric: k_j = step^(j-1), j >= 1
  long long max_order = 512;
};

struct FunctionSpec {
  enum class Kind { sin, monomial, gaussian, geometric, lacunary_trig, sech, gauss_cos, poly };
  Kind kind = Kind::sin;
  int m = 1;            // monomial degree
  double c = 0.5;       // geometric: 1/(1 - c x); gauss_cos frequency
  double b = 2.0;       // lacunary_trig base
  double s = 1.5;       // lacunary_trig decay exponent
  int terms = 6;        // lacunary_trig number of terms
  double amplitude = 1.0;
  double dilation = 1.0;  // f(x) -> amplitude * f(dilation * x)
  int dimension = 1;      // poly
  std::map<std::vector<int>, double> coeffs;  // poly: exponent vector -> coefficient
};

struct FamilySpec {
  enum class Kind { gevrey_family, from_omega_family };
  Kind kind = Kind::gevrey_family;
  WeightFunctionSpec omega;
};

}  // namespace ultraweights
