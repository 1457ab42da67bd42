#pragma once

#include <utility>
#include <vector>

#include "arctic/asymptotics_impl.hpp"
#include "arctic/params.hpp"

namespace arctic {

// pi / (pi - 2 eta)
MPScalar alpha_exponent(const MPScalar& eta);

// Free energy f with Z_N ~ e^(-N^2 f); removable singularities at u = 0 and
// v = -pi/2 are evaluated as guarded limits.
MPScalar free_energy(const ModelParams& params, mpfr_prec_t precision);

enum class ExponentKind { Psi, Phi };
// One-point exponents: H_N ~ e^(-N psi) (Psi) and the shifted phi variant
// entering the saddle actions.
MPScalar one_point_exponent(const ModelParams& params, const MPScalar& xi, ExponentKind kind,
                            mpfr_prec_t precision);

struct SaddleData {
  MPScalar xi;
  MPScalar t;
  MPScalar kappa;
  MPScalar lambda;
  std::vector<MPScalar> p;  // p2 (6V); p2,p3,p4 (6V'); p3..p6 (20V); p3 (DT)
};

SaddleData saddle_data(const ModelParams& params, const MPScalar& xi, mpfr_prec_t precision);

// Residuals of the saddle-point systems in denominator-cleared polynomial
// form, plus d/dxi S_0 evaluated by dual propagation (last entry).
std::vector<MPScalar> saddle_residuals(const ModelParams& params, const MPScalar& xi,
                                       mpfr_prec_t precision);

// (Wronskian/Liouville residual of W, psi-ODE relative residual at xi).
std::pair<MPScalar, MPScalar> liouville_residuals(const ModelParams& params, const MPScalar& xi,
                                                  mpfr_prec_t precision);

// Left endpoint of the NE-branch xi range (the right endpoint is 0).
MPScalar branch_xi_min(const ModelParams& params);

MPScalar kappa_of_xi(const ModelParams& params, const MPScalar& xi, mpfr_prec_t precision);
MPScalar lambda_of_xi(const ModelParams& params, const MPScalar& xi, mpfr_prec_t precision);
MPScalar t_of_xi(const ModelParams& params, const MPScalar& xi, mpfr_prec_t precision);

// Bisection solve of kappa_model[xi] = kappa on the NE branch (monotonicity
// is checked empirically on a coarse grid first).
MPScalar xi_from_kappa(const ModelParams& params, const MPScalar& kappa, mpfr_prec_t precision);

}  // namespace arctic
