#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "arctic/mp.hpp"

namespace arctic {

enum class Model { SixV, SixVPrime, TwentyV, DT };

std::string model_name(Model m);
std::optional<Model> model_from_name(const std::string& s);

// Spectral parameters plus the projective scale factors of each model.
// mu() is the path-count multiplier: the E border of the rescaled domain has
// height mu (1 for 6V and DT, 2 for 6V' and 20V).
struct ModelParams {
  Model model = Model::SixV;
  MPScalar eta, u, v;
  MPScalar rho;                // 6V scale
  MPScalar rho_o, rho_e;       // 6V' odd/even row scales
  MPScalar nu;                 // 20V scale

  int mu() const { return (model == Model::SixVPrime || model == Model::TwentyV) ? 2 : 1; }
  mpfr_prec_t precision() const { return eta.precision(); }
  ModelParams with_precision(mpfr_prec_t prec) const;
};

// All scales default to 1.
ModelParams make_params(Model m, const MPScalar& eta, const MPScalar& u, const MPScalar& v);

enum class NamedPoint {
  ASM,            // 6V, all weights 1
  TauASM,         // 6V, (1,1,sqrt(tau)) with tau = 4 sin^2(eta)
  VSASM,          // 6V', all weights 1
  TauVSASM,       // 6V'
  TwentyVDwbc12,  // 6V, weights (1,sqrt2,1)
  TwentyVDwbc3,   // 6V'
  Uniform20V,     // 20V, all weights 1
  FreeFermion6VP, // 6V' at eta=pi/4, u=0, v=-pi/2
};

std::optional<NamedPoint> named_point_from_name(const std::string& s);
// eta is only consulted by the Tau* points.
ModelParams named_point(NamedPoint p, mpfr_prec_t prec, const MPScalar* eta = nullptr);

// Throws DomainError when outside the positivity domain of the model.
void check_domain(const ModelParams& p);
bool in_domain(const ModelParams& p);

struct WeightTable {
  // 6V
  MPScalar a, b, c;
  // 6V'
  MPScalar a_o, b_o, c_o, a_e, b_e, c_e;
  // 20V
  std::vector<MPScalar> omega;  // omega_0..omega_6
};
WeightTable weight_table(const ModelParams& p);

// Default working precision for computations whose largest lattice size is n.
mpfr_prec_t default_precision_bits(int n);

// Uniform sample strictly inside the model domain (margin in radians).
ModelParams random_in_domain(Model m, std::mt19937_64& rng, mpfr_prec_t prec,
                             double margin = 0.15);

}  // namespace arctic
