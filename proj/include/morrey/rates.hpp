#pragma once

#include <cmath>

#include "morrey/tri.hpp"

namespace morrey {

inline bool is_pos_inf(double x) { return std::isinf(x) && x > 0; }

// Asymptotic class of a positive sequence a_j: a_j is comparable to
// 2^(-beta*j) * j^gamma for large j. beta > 0 means exponential decay,
// beta < 0 exponential growth; at beta == 0 the log-power gamma decides.
// `trusted` is cleared when the rate comes from low-confidence tabulated
// data, in which case every tail decision downstream degrades to unknown.
struct RateTerm {
  double beta = 0.0;
  double gamma = 0.0;
  bool trusted = true;

  friend RateTerm operator*(const RateTerm& a, const RateTerm& b) {
    return {a.beta + b.beta, a.gamma + b.gamma, a.trusted && b.trusted};
  }
  friend bool operator==(const RateTerm& a, const RateTerm& b) {
    return a.beta == b.beta && a.gamma == b.gamma && a.trusted == b.trusted;
  }
};

inline RateTerm rate_pow(const RateTerm& a, double r) {
  return {r * a.beta, r * a.gamma, a.trusted};
}

// Membership of {a_j} in ell_q (q = +inf gives the bounded-sequence space).
// Boundary convention at beta == 0: sum of j^(gamma*q) converges iff
// gamma*q < -1, so the harmonic edge gamma == -1/q diverges and answers no.
inline Tri ellq_membership(const RateTerm& r, double q) {
  if (!(q > 0)) throw config_error("ell_q exponent must be positive or inf");
  if (!r.trusted) return Tri::unknown;
  if (r.beta > 0) return Tri::yes;
  if (r.beta < 0) return Tri::no;
  if (is_pos_inf(q)) return to_tri(r.gamma <= 0);
  return to_tri(r.gamma < -1.0 / q);
}

// Membership in c_0 (sequences vanishing at infinity).
inline Tri c0_membership(const RateTerm& r) {
  if (!r.trusted) return Tri::unknown;
  if (r.beta > 0) return Tri::yes;
  if (r.beta < 0) return Tri::no;
  return to_tri(r.gamma < 0);
}

}  // namespace morrey
