#pragma once

#include <gmpxx.h>

#include <vector>

#include "arctic/params.hpp"

namespace arctic {

// Exit statistics of the topmost path: total plus per-exit-height splits.
// Vertex models index exits k = 1..mu*n-1 (stored at [k-1]); the domino
// tiling indexes entry heights k = 0..n-1 (stored at [k]).
struct RefinedCountsZ {
  mpz_class total;
  std::vector<mpz_class> by_exit;
  std::vector<mpz_class> by_exit_horizontal;  // 20V only
  std::vector<mpz_class> by_exit_diagonal;    // 20V only
};

struct RefinedCountsW {
  MPScalar total;
  std::vector<MPScalar> by_exit;
  std::vector<MPScalar> by_exit_horizontal;
  std::vector<MPScalar> by_exit_diagonal;
};

// Pure configuration counting (all vertex weights 1); valid stand-in for the
// combinatorial points where every Boltzmann weight equals 1.
RefinedCountsZ enumerate_uniform_counts(Model model, int n);

// Weighted transfer-matrix enumeration at arbitrary in-domain parameters.
RefinedCountsW enumerate_vertex_model(const ModelParams& params, int n, mpfr_prec_t precision);

// Domino tilings of the Aztec triangle via the non-intersecting Schroeder
// path family (LGV determinants, exact integers). by_exit[k] counts tilings
// whose topmost path first enters the last vertical at height k.
RefinedCountsZ count_aztec_triangle(int n);

// Max |Z^DT_{n,k} - (Z^20V_{n,n+k+1} + Z^20V_{n,n+k})| over k; zero when the
// refined correspondence holds exactly.
mpz_class refined_dt_identity(int n);

// Product formula for the number of 20V-DWBC3 configurations (equivalently
// Aztec-triangle domino tilings): 2^(N(N-1)/2) prod_i (4i+2)!/(N+2i+1)!.
mpz_class z20v_product_formula(int n);

// Exact determinant of an integer matrix (fraction-free Bareiss).
mpz_class det_bareiss(std::vector<std::vector<mpz_class>> m);

}  // namespace arctic
