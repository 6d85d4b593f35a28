#pragma once

#include <optional>
#include <string>

#include "morrey/phi.hpp"

namespace morrey {

// Space scales handled by the decision engine.
//  N  smoothness-Morrey scale (level-wise Morrey aggregation)
//  B  uniform-window scale
//  E  integrability-mixing scale (shares all decisions with its F variant)
//  M  plain Morrey scale (no smoothness parameter)
//  classical_besov  the weightless scale; p = inf allowed for sup targets
//  Lr  Lebesgue target, parameter r
//  bmo  mean-oscillation target, realized as the B-scale point
//       (s=0, p=2, q=2) with a constant weight
enum class Scale { N, B, E, M, classical_besov, Lr, bmo };

struct SpaceSpec {
  Scale scale = Scale::N;
  int d = 1;
  double s = 0;
  double p = 1;  // +inf only for classical_besov
  double q = 1;  // +inf allowed
  double r = 1;  // Lr only
  std::optional<PhiSpec> phi;
};

// Throws config_error on scale-specific parameter violations. For the E
// scale with q < inf the weight must decay like a strictly positive power,
// otherwise the space is not defined.
void validate_space(const SpaceSpec& spec);

const char* scale_name(Scale s);
Scale scale_from_string(const std::string& name);

// Weight to use in computations: explicit for N/B/E/M, t^(d/p) for finite-p
// classical spaces, constant for bmo.
PhiSpec effective_phi(const SpaceSpec& spec);

}  // namespace morrey
