#pragma once

#include <vector>

#include "morrey/dyadic.hpp"
#include "morrey/phi.hpp"

namespace morrey {

struct NormParams {
  double s = 0;
  double p = 1;
  double q = 1;  // +inf allowed
  PhiSpec phi;
};

// Standard ell_q aggregation of finitely many non-negative values;
// q = +inf gives the maximum, 0 < q < 1 the quasi-norm sum.
double ell_q(const std::vector<double>& values, double q);

// Level-wise formulation: per level j take the supremum over coarser
// windows nu <= j of phi(2^-nu) 2^((nu-j)d/p) (sum of p-th powers inside
// the window)^(1/p), then aggregate 2^(js) weighted level values in ell_q.
double n_norm_star(const DyadicSeq& seq, const NormParams& prm);

// Same quantity computed through the window supremum of each level's step
// function, including windows coarser than the unit cube (levels -5..0,
// dominated for admissible weights). Independent code path used as a
// cross-check of n_norm_star.
double n_norm_morrey(const DyadicSeq& seq, const NormParams& prm);

// Uniform-over-windows variant: supremum over windows P of
// phi(side(P)) |P|^(-1/p) ( sum_{j >= level(P)} 2^(j(s-d/p)q)
// (sum of p-th powers inside P)^(q/p) )^(1/q).
double b_norm(const DyadicSeq& seq, const NormParams& prm);

// ell_q over levels of 2^(js) * (largest entry of the level); the target
// norm for sup-type spaces.
double besov_sup_norm(const DyadicSeq& seq, double s, double q);

struct WindowValue {
  int nu = 0;
  uint64_t code = 0;
  double value = 0;
};

// Per-window inner aggregates of b_norm; the norm is the max over entries.
// Windows with no mass are omitted.
std::vector<WindowValue> b_norm_windows(const DyadicSeq& seq,
                                        const NormParams& prm);

// Per-window peak values sup_{j >= nu, cell in window} 2^(j*s2) * entry,
// aligned with b_norm_windows keys. Used by the interpolation check.
std::vector<WindowValue> sup_norm_windows(const DyadicSeq& seq, double s2);

}  // namespace morrey
