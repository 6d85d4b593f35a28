#pragma once

#include <optional>
#include <string>
#include <vector>

#include "morrey/rates.hpp"

namespace morrey {

// Weight function menu. Every family evaluates exactly on dyadic points and
// carries a closed-form decay rate; `tabulated` is the escape hatch with a
// user-asserted rate.
enum class PhiFamily {
  power,            // t^(d/u)
  piecewise_power,  // t^(d/u) for t <= 1, t^(d/v) for t > 1; u,v may be inf
  power_log,        // t^(d/u) * log(L+t)^a, a <= 0, L > 1
  log_blend,        // log(1+t)/log 2 for t < 1, t for t >= 1
  inv_log,          // log(a)/log(1/t) for t < 1/a, else 1; a >= e
  psi_critical,     // (e*t)^(d/p) * log(1/t) for t < 1/e, else 1
  tabulated,        // samples phi(2^-j), j = 0..J
};

struct PhiSpec {
  PhiFamily family = PhiFamily::power;
  int d = 1;
  double u = 1;         // power, piecewise_power, power_log
  double v = INFINITY;  // piecewise_power branch for t > 1
  double a = 0;         // power_log exponent / inv_log threshold parameter
  double L = 2;         // power_log shift
  double p = 1;         // psi_critical parameter
  std::vector<double> samples;  // tabulated only
  RateTerm tab_rate;            // tabulated only
  double scale = 1.0;           // normalization factor so that phi(1) == 1

  int tab_levels() const { return static_cast<int>(samples.size()) - 1; }
};

// Factories return normalized specs (phi(1) == 1). Parameter domains are
// checked here so downstream code can assume well-formed weights.
PhiSpec make_power(int d, double u);
PhiSpec make_piecewise_power(int d, double u, double v);
PhiSpec make_power_log(int d, double u, double a, double L);
PhiSpec make_log_blend(int d);
PhiSpec make_inv_log(int d, double a);
PhiSpec make_psi_critical(int d, double p);
PhiSpec make_tabulated(int d, std::vector<double> samples, RateTerm rate);
PhiSpec make_constant(int d);  // piecewise_power(inf, inf)

// Evaluates phi(t) for t > 0, normalization applied. The tabulated family
// only answers on its sample grid t = 2^-j, 0 <= j <= J.
double eval_phi(const PhiSpec& phi, double t);

// Enforces phi(1) == 1 by scaling. Idempotent.
PhiSpec normalize(PhiSpec phi);

// Decay class of phi(2^-j) as j grows.
RateTerm rate_at_zero(const PhiSpec& phi);

// phi(2^-j) for j = 0..J.
std::vector<double> dyadic_samples(const PhiSpec& phi, int J);

// True when phi(t) stays bounded away from 0 as t -> 0 (rate (0,0), trusted).
bool positive_limit_at_zero(const PhiSpec& phi);

struct GpReport {
  bool monotone_ok = true;  // phi(2^-(j+1)) <= phi(2^-j) on 0..J-1
  bool gp_ok = true;        // 2^(j d/p) phi(2^-j) non-decreasing on 0..J
  std::optional<int> first_violation_level;
};
// Dyadic admissibility check of the weight class at integrability p.
GpReport validate_gp(const PhiSpec& phi, double p, int J);

struct IntcReport {
  bool ok = false;
  // Largest observed prefix-max(g)/g over the sampled range,
  // g_j = 2^(-j*eps)/phi(2^-j); finite bound means the almost-monotonicity
  // condition holds with this constant on 0..J.
  double inferred_constant = 1.0;
  bool sample_range_only = false;  // tabulated: nothing is known past level J
};
// Checks that t^eps/phi(t) is almost non-increasing toward 0 on the dyadic
// grid, i.e. phi dominates the power t^eps near zero.
IntcReport validate_intc(const PhiSpec& phi, double epsilon, int J);

// Smallest epsilon on a fixed test grid for which validate_intc holds.
std::optional<double> intc_smallest_epsilon(const PhiSpec& phi, int J);

// Exists eps > 0 making validate_intc pass (i.e. the decay exponent of phi
// is strictly positive and trusted).
bool intc_satisfiable(const PhiSpec& phi);

std::string family_name(PhiFamily f);

}  // namespace morrey
