#include "morrey/phi.hpp"

#include <algorithm>
#include <cmath>

#include "morrey/errors.hpp"

namespace morrey {

namespace {

double ratio_exponent(int d, double u) {
  return is_pos_inf(u) ? 0.0 : static_cast<double>(d) / u;
}

double raw_value(const PhiSpec& phi, double t) {
  switch (phi.family) {
    case PhiFamily::power:
      return std::pow(t, ratio_exponent(phi.d, phi.u));
    case PhiFamily::piecewise_power:
      return t <= 1.0 ? std::pow(t, ratio_exponent(phi.d, phi.u))
                      : std::pow(t, ratio_exponent(phi.d, phi.v));
    case PhiFamily::power_log:
      return std::pow(t, ratio_exponent(phi.d, phi.u)) *
             std::pow(std::log(phi.L + t), phi.a);
    case PhiFamily::log_blend:
      return t < 1.0 ? std::log1p(t) / std::log(2.0) : t;
    case PhiFamily::inv_log:
      return t < 1.0 / phi.a ? std::log(phi.a) / std::log(1.0 / t) : 1.0;
    case PhiFamily::psi_critical: {
      const double e = std::exp(1.0);
      if (t < 1.0 / e)
        return std::pow(e * t, ratio_exponent(phi.d, phi.p)) *
               std::log(1.0 / t);
      return 1.0;
    }
    case PhiFamily::tabulated:
      break;
  }
  throw internal_error("raw_value: unreachable family");
}

void check_dim(int d) {
  if (d < 1 || d > 4) throw config_error("dimension must be in 1..4");
}

void check_exponent(double u, const char* name) {
  if (is_pos_inf(u)) return;
  if (!(u > 0) || !std::isfinite(u))
    throw config_error(std::string(name) + " must be positive or inf");
}

}  // namespace

PhiSpec make_power(int d, double u) {
  check_dim(d);
  check_exponent(u, "u");
  PhiSpec phi;
  phi.family = PhiFamily::power;
  phi.d = d;
  phi.u = u;
  return normalize(phi);
}

PhiSpec make_piecewise_power(int d, double u, double v) {
  check_dim(d);
  check_exponent(u, "u");
  check_exponent(v, "v");
  PhiSpec phi;
  phi.family = PhiFamily::piecewise_power;
  phi.d = d;
  phi.u = u;
  phi.v = v;
  return normalize(phi);
}

PhiSpec make_power_log(int d, double u, double a, double L) {
  check_dim(d);
  check_exponent(u, "u");
  if (!(a <= 0) || !std::isfinite(a))
    throw config_error("log exponent a must be <= 0");
  if (!(L > 1) || !std::isfinite(L))
    throw config_error("log shift L must be > 1");
  PhiSpec phi;
  phi.family = PhiFamily::power_log;
  phi.d = d;
  phi.u = u;
  phi.a = a;
  phi.L = L;
  return normalize(phi);
}

PhiSpec make_log_blend(int d) {
  check_dim(d);
  PhiSpec phi;
  phi.family = PhiFamily::log_blend;
  phi.d = d;
  return normalize(phi);
}

PhiSpec make_inv_log(int d, double a) {
  check_dim(d);
  if (!(a >= std::exp(1.0)) || !std::isfinite(a))
    throw config_error("inv_log parameter a must be >= e");
  PhiSpec phi;
  phi.family = PhiFamily::inv_log;
  phi.d = d;
  phi.a = a;
  return normalize(phi);
}

PhiSpec make_psi_critical(int d, double p) {
  check_dim(d);
  if (!(p > 0) || !std::isfinite(p))
    throw config_error("psi_critical parameter p must be finite positive");
  PhiSpec phi;
  phi.family = PhiFamily::psi_critical;
  phi.d = d;
  phi.p = p;
  return normalize(phi);
}

PhiSpec make_tabulated(int d, std::vector<double> samples, RateTerm rate) {
  check_dim(d);
  if (samples.empty()) throw config_error("tabulated weight needs samples");
  for (double s : samples)
    if (!(s > 0) || !std::isfinite(s))
      throw config_error("tabulated samples must be finite positive");
  if (!std::isfinite(rate.beta) || !std::isfinite(rate.gamma))
    throw config_error("tabulated rate must be finite");
  PhiSpec phi;
  phi.family = PhiFamily::tabulated;
  phi.d = d;
  phi.samples = std::move(samples);
  phi.tab_rate = rate;
  return normalize(phi);
}

PhiSpec make_constant(int d) {
  return make_piecewise_power(d, INFINITY, INFINITY);
}

PhiSpec normalize(PhiSpec phi) {
  if (phi.family == PhiFamily::tabulated) {
    const double head = phi.samples.front();
    for (double& s : phi.samples) s /= head;
    phi.scale = 1.0;
    return phi;
  }
  phi.scale = 1.0 / raw_value(phi, 1.0);
  return phi;
}

double eval_phi(const PhiSpec& phi, double t) {
  if (!(t > 0) || !std::isfinite(t))
    throw config_error("weight argument must be finite positive");
  if (phi.family == PhiFamily::tabulated) {
    const int j = static_cast<int>(std::lround(-std::log2(t)));
    if (j < 0 || j > phi.tab_levels() || std::ldexp(1.0, -j) != t)
      throw config_error("tabulated weight evaluated off its sample grid");
    return phi.samples[static_cast<size_t>(j)];
  }
  return phi.scale * raw_value(phi, t);
}

RateTerm rate_at_zero(const PhiSpec& phi) {
  switch (phi.family) {
    case PhiFamily::power:
      return {ratio_exponent(phi.d, phi.u), 0.0, true};
    case PhiFamily::piecewise_power:
      return {ratio_exponent(phi.d, phi.u), 0.0, true};
    case PhiFamily::power_log:
      // log(L + t) tends to the positive constant log L, so only the power
      // factor shapes the decay.
      return {ratio_exponent(phi.d, phi.u), 0.0, true};
    case PhiFamily::log_blend:
      return {1.0, 0.0, true};
    case PhiFamily::inv_log:
      return {0.0, -1.0, true};
    case PhiFamily::psi_critical:
      return {ratio_exponent(phi.d, phi.p), 1.0, true};
    case PhiFamily::tabulated:
      return phi.tab_rate;
  }
  throw internal_error("rate_at_zero: unreachable family");
}

std::vector<double> dyadic_samples(const PhiSpec& phi, int J) {
  if (J < 0) throw config_error("sample depth must be >= 0");
  if (phi.family == PhiFamily::tabulated && J > phi.tab_levels())
    throw config_error("tabulated weight has no samples past its grid");
  std::vector<double> out;
  out.reserve(static_cast<size_t>(J) + 1);
  for (int j = 0; j <= J; ++j) out.push_back(eval_phi(phi, std::ldexp(1.0, -j)));
  return out;
}

bool positive_limit_at_zero(const PhiSpec& phi) {
  const RateTerm r = rate_at_zero(phi);
  return r.trusted && r.beta == 0.0 && r.gamma == 0.0;
}

namespace {
int clamped_depth(const PhiSpec& phi, int J) {
  if (phi.family == PhiFamily::tabulated) return std::min(J, phi.tab_levels());
  return J;
}
}  // namespace

GpReport validate_gp(const PhiSpec& phi, double p, int J) {
  if (!(p > 0)) throw config_error("integrability exponent must be positive");
  const int JJ = clamped_depth(phi, J);
  const std::vector<double> s = dyadic_samples(phi, JJ);
  const double step = is_pos_inf(p) ? 1.0 : std::exp2(phi.d / p);
  const double slack = 1e-12;
  GpReport rep;
  for (int j = 0; j + 1 <= JJ; ++j) {
    const bool mono = s[j + 1] <= s[j] * (1.0 + slack);
    const bool gp = s[j + 1] * step >= s[j] * (1.0 - slack);
    if (mono && gp) continue;
    if (!mono) rep.monotone_ok = false;
    if (!gp) rep.gp_ok = false;
    if (!rep.first_violation_level) rep.first_violation_level = j;
  }
  return rep;
}

IntcReport validate_intc(const PhiSpec& phi, double epsilon, int J) {
  if (!(epsilon > 0) || !std::isfinite(epsilon))
    throw config_error("epsilon must be finite positive");
  const int JJ = clamped_depth(phi, J);
  const std::vector<double> s = dyadic_samples(phi, JJ);
  IntcReport rep;
  rep.sample_range_only = phi.family == PhiFamily::tabulated;

  const RateTerm r = rate_at_zero(phi);
  rep.ok = r.beta > epsilon || (r.beta == epsilon && r.gamma <= 0.0);

  double prefix_max = 0.0;
  double worst = 1.0;
  for (int j = 0; j <= JJ; ++j) {
    const double g = std::exp2(-j * epsilon) / s[static_cast<size_t>(j)];
    prefix_max = std::max(prefix_max, g);
    worst = std::max(worst, prefix_max / g);
  }
  rep.inferred_constant = worst;
  return rep;
}

std::optional<double> intc_smallest_epsilon(const PhiSpec& phi, int J) {
  static const double grid[] = {0.001, 0.01, 0.05, 0.1, 0.25, 0.5, 1.0, 2.0};
  for (double eps : grid)
    if (validate_intc(phi, eps, J).ok) return eps;
  return std::nullopt;
}

bool intc_satisfiable(const PhiSpec& phi) {
  const RateTerm r = rate_at_zero(phi);
  return r.trusted && r.beta > 0.0;
}

std::string family_name(PhiFamily f) {
  switch (f) {
    case PhiFamily::power:
      return "power";
    case PhiFamily::piecewise_power:
      return "piecewise_power";
    case PhiFamily::power_log:
      return "power_log";
    case PhiFamily::log_blend:
      return "log_blend";
    case PhiFamily::inv_log:
      return "inv_log";
    case PhiFamily::psi_critical:
      return "psi_critical";
    case PhiFamily::tabulated:
      return "tabulated";
  }
  throw internal_error("family_name: unreachable family");
}

}  // namespace morrey
