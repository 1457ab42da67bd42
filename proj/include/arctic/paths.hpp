#pragma once

#include <vector>

#include "arctic/params.hpp"

namespace arctic {

// Relative step weights of a single path in the empty quadrant (all weights
// divided by the empty-vertex weight of the ambient model). The gamma/alpha
// combinations drive the closed-form series; several of them are negative or
// zero inside the domain, so nothing here assumes positivity.
struct PathWeights {
  Model model;
  // 6V (b0, c0) and 6V' (b0, c0 even heights; b1, c1 odd heights)
  MPScalar b0, c0, b1, c1;
  // gamma_1, gamma_2, gamma_3, gamma_4 (6V uses gamma_1, gamma_2 only)
  MPScalar g1, g2, g3, g4;
  // 20V: t[i] = omega_i/omega_0 and the denominator coefficients alpha_1..6
  std::vector<MPScalar> t;      // size 7
  std::vector<MPScalar> alpha;  // size 6
};

PathWeights path_weights(const ModelParams& params, mpfr_prec_t precision);

// Exact coefficient Y_{k,l} of the model's generating function; for 20V a
// linear combination with entry weights (beta1, beta2), default (1,1).
MPScalar path_partition_closed(const ModelParams& params, int k, int l, mpfr_prec_t precision,
                               const MPScalar* beta1 = nullptr, const MPScalar* beta2 = nullptr);

// Independent step-by-step dynamic-programming oracle for the same quantity.
MPScalar path_partition_dp(const ModelParams& params, int k, int l, mpfr_prec_t precision,
                           const MPScalar* beta1 = nullptr, const MPScalar* beta2 = nullptr);

}  // namespace arctic
