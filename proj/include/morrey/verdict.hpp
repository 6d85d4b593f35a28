#pragma once

#include <optional>
#include <string>
#include <vector>

#include "morrey/indices.hpp"
#include "morrey/space.hpp"

namespace morrey {

struct Trace {
  double rho = 1;
  double qstar = INFINITY;
  std::optional<RateTerm> ratio_rate, alpha_rate, xi_rate;
  std::optional<double> sigma, sigma_inf, sigma_bar;
  std::optional<std::string> dominance;
  std::vector<std::string> notes;
};

// Tri-state embedding decision with the applied rule identifiers and the
// intermediate quantities that produced it. compact == yes always implies
// continuous == yes.
struct Verdict {
  Tri continuous = Tri::unknown;
  Tri compact = Tri::unknown;
  std::vector<std::string> rules;
  Trace trace;
};

// Same-scale deciders.
Verdict decide_n(const SpaceSpec& src, const SpaceSpec& tgt);
Verdict decide_b(const SpaceSpec& src, const SpaceSpec& tgt);
Verdict decide_e(const SpaceSpec& src, const SpaceSpec& tgt);
Verdict decide_morrey(const PhiSpec& phi1, double p1, const PhiSpec& phi2,
                      double p2);

// Closed-form decision for power weights phi_i = t^(d/u_i); serves as an
// independent oracle for decide_n on that subfamily.
Verdict decide_n_classical(double s1, double u1, double p1, double q1,
                           double s2, double u2, double p2, double q2, int d);

// B-scale source into the sup-type target with smoothness s2. Continuity is
// equivalent to boundedness of the condition sequence
// 2^(j(s2-s1))/phi(2^-j), compactness to its vanishing.
Verdict decide_b_sup_target(const SpaceSpec& src, double s2);

// Cross-scale rules: N <-> classical_besov, N -> Lr, B <-> bmo.
Verdict decide_special(const SpaceSpec& src, const SpaceSpec& tgt);

// Dispatch on the scale pair; throws config_error for unsupported pairs.
Verdict decide(const SpaceSpec& src, const SpaceSpec& tgt);

}  // namespace morrey
