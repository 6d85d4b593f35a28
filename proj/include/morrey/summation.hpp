#pragma once

#include <cmath>

namespace morrey {

// Neumaier compensated accumulator. Keeps the relative error of a sum of
// same-signed terms at a few ulps independent of the number of addends,
// which is what makes the cross-evaluator 1e-12 agreement checks feasible.
template <typename F = double>
struct Accum {
  F sum = 0;
  F comp = 0;

  void add(F x) {
    F t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }

  F value() const { return sum + comp; }
};

}  // namespace morrey
