#pragma once

#include <vector>

#include "morrey/phi.hpp"
#include "morrey/tri.hpp"

namespace morrey {

// Shared context of a source/target pair on one dimension: integrability
// exponents, the transfer exponent rho, and the dual fine-index qstar with
// 1/qstar = (1/q2 - 1/q1)_+ (qstar = inf exactly when q1 <= q2).
struct PairContext {
  PhiSpec phi1, phi2;
  double p1 = 1, p2 = 1;
  double q1 = 1, q2 = 1;
  double rho = 1;
  double qstar = INFINITY;
};

PairContext make_pair_context(const PhiSpec& phi1, double p1, double q1,
                              const PhiSpec& phi2, double p2, double q2);

// Ratio phi2(2^-nu) / phi1(2^-nu)^rho sampled on 0..J and its prefix maxima
// alpha_j (non-decreasing, alpha_0 = 1 for normalized weights).
std::vector<double> ratio_samples(const PairContext& ctx, int J);
std::vector<double> alpha_seq(const PairContext& ctx, int J);

RateTerm ratio_rate(const PairContext& ctx);
// Prefix-sup closure of the ratio rate: growing ratios keep their rate,
// decaying or bounded ratios flatten to the constant class (0,0).
RateTerm alpha_rate(const PairContext& ctx);

// Embedding condition sequence xi_j = 2^(j(s2-s1)) alpha_j phi1(2^-j)^(rho-1).
RateTerm xi_rate(const PairContext& ctx, double s1, double s2);
std::vector<double> xi_seq(const PairContext& ctx, double s1, double s2, int J);

// Critical target smoothness thresholds, computed through the rate algebra.
double sigma_index(double s1, const PhiSpec& phi1, double rho);
double sigma_inf_index(double s1, const PhiSpec& phi1);

enum class Dominance { leq, geq, both, neither };
const char* to_string(Dominance d);
inline bool allows_leq(Dominance d) { return d == Dominance::leq || d == Dominance::both; }
inline bool allows_geq(Dominance d) { return d == Dominance::geq || d == Dominance::both; }

struct DominanceReport {
  Dominance cls = Dominance::both;
  double upper_constant = 1;  // max sampled ratio
  double lower_constant = 1;  // min sampled ratio
  bool rate_asserted = true;  // false when drawn from low-confidence data
};

// Classifies whether phi2 is bounded above / below by a constant multiple of
// phi1^rho. "neither" can only arise for tabulated inputs whose samples
// contradict the asserted rate.
DominanceReport dominance_check(const PairContext& ctx, int J);

// Requires lower dominance (geq or both); the shifted threshold
// sigma_bar = sigma + decay_exponent(phi2/phi1^rho).
double sigma_bar_index(double s1, const PairContext& ctx);

struct SlopeInterval {
  double lo = 0, hi = 0;   // enclosing interval for the estimated quantity
  double beta_hat = 0;     // point estimate of the decay exponent
  double margin = 0;
};

// Decay exponent of phi estimated from the last half of the dyadic samples,
// with a data-driven uncertainty margin. Never a point verdict.
SlopeInterval slope_interval(const PhiSpec& phi, int J);
SlopeInterval sigma_numeric(double s1, const PhiSpec& phi1, double rho, int J);
SlopeInterval sigma_inf_numeric(double s1, const PhiSpec& phi1, int J);

}  // namespace morrey
