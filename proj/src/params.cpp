#include "arctic/params.hpp"

#include <cstdlib>

#include "arctic/errors.hpp"

namespace arctic {

std::string model_name(Model m) {
  switch (m) {
    case Model::SixV: return "6v";
    case Model::SixVPrime: return "6vp";
    case Model::TwentyV: return "20v";
    case Model::DT: return "dt";
  }
  return "?";
}

std::optional<Model> model_from_name(const std::string& s) {
  if (s == "6v" || s == "6V") return Model::SixV;
  if (s == "6vp" || s == "6v'" || s == "6VP") return Model::SixVPrime;
  if (s == "20v" || s == "20V") return Model::TwentyV;
  if (s == "dt" || s == "DT") return Model::DT;
  return std::nullopt;
}

ModelParams ModelParams::with_precision(mpfr_prec_t prec) const {
  ModelParams r = *this;
  r.eta = eta.with_precision(prec);
  r.u = u.with_precision(prec);
  r.v = v.with_precision(prec);
  r.rho = rho.with_precision(prec);
  r.rho_o = rho_o.with_precision(prec);
  r.rho_e = rho_e.with_precision(prec);
  r.nu = nu.with_precision(prec);
  return r;
}

ModelParams make_params(Model m, const MPScalar& eta, const MPScalar& u, const MPScalar& v) {
  ModelParams p;
  p.model = m;
  mpfr_prec_t prec = eta.precision();
  p.eta = eta;
  p.u = u.with_precision(prec);
  p.v = v.with_precision(prec);
  p.rho = MPScalar(1L, prec);
  p.rho_o = MPScalar(1L, prec);
  p.rho_e = MPScalar(1L, prec);
  p.nu = MPScalar(1L, prec);
  return p;
}

std::optional<NamedPoint> named_point_from_name(const std::string& s) {
  if (s == "asm") return NamedPoint::ASM;
  if (s == "tau-asm") return NamedPoint::TauASM;
  if (s == "vsasm") return NamedPoint::VSASM;
  if (s == "tau-vsasm") return NamedPoint::TauVSASM;
  if (s == "20v-dwbc12") return NamedPoint::TwentyVDwbc12;
  if (s == "20v-dwbc3") return NamedPoint::TwentyVDwbc3;
  if (s == "uniform" || s == "uniform-20v") return NamedPoint::Uniform20V;
  if (s == "free-fermion" || s == "ff-6vp") return NamedPoint::FreeFermion6VP;
  return std::nullopt;
}

ModelParams named_point(NamedPoint np, mpfr_prec_t prec, const MPScalar* eta_in) {
  MPScalar pi = MPScalar::pi(prec);
  MPScalar one(1L, prec);
  auto frac = [&](long num, long den) { return pi * MPScalar(num, prec) / MPScalar(den, prec); };
  ModelParams p;
  switch (np) {
    case NamedPoint::ASM:
      p = make_params(Model::SixV, frac(1, 6), frac(1, 2), MPScalar(0L, prec));
      p.rho = one / cos(p.eta);
      return p;
    case NamedPoint::TauASM: {
      MPScalar eta = eta_in ? eta_in->with_precision(prec) : frac(1, 6);
      p = make_params(Model::SixV, eta, frac(1, 2), MPScalar(0L, prec));
      p.rho = one / cos(p.eta);
      return p;
    }
    case NamedPoint::VSASM:
      p = make_params(Model::SixVPrime, frac(1, 6), MPScalar(0L, prec), -frac(1, 2));
      p.rho_o = p.rho_e = one / cos(p.eta);
      return p;
    case NamedPoint::TauVSASM: {
      MPScalar eta = eta_in ? eta_in->with_precision(prec) : frac(1, 6);
      p = make_params(Model::SixVPrime, eta, MPScalar(0L, prec), -frac(1, 2));
      p.rho_o = p.rho_e = one / cos(p.eta);
      return p;
    }
    case NamedPoint::TwentyVDwbc12:
      p = make_params(Model::SixV, frac(1, 8), frac(5, 8), MPScalar(0L, prec));
      p.rho = sqrt(MPScalar(2L, prec));
      return p;
    case NamedPoint::TwentyVDwbc3:
      p = make_params(Model::SixVPrime, frac(1, 8), frac(1, 8), -frac(1, 2));
      p.rho_o = p.rho_e = sqrt(MPScalar(2L, prec));
      return p;
    case NamedPoint::Uniform20V:
      p = make_params(Model::TwentyV, frac(1, 8), frac(1, 8), -frac(1, 2));
      p.nu = sqrt(MPScalar(2L, prec));
      return p;
    case NamedPoint::FreeFermion6VP:
      p = make_params(Model::SixVPrime, frac(1, 4), MPScalar(0L, prec), -frac(1, 2));
      return p;
  }
  throw DomainError("unknown named point");
}

static void check_common_eta(const ModelParams& p) {
  MPScalar pi = MPScalar::pi(p.precision());
  MPScalar half_pi = pi / MPScalar(2L, p.precision());
  if (!(p.eta > MPScalar(0L, p.precision()) && p.eta < half_pi))
    throw DomainError("eta must lie in (0, pi/2)");
}

void check_domain(const ModelParams& p) {
  mpfr_prec_t prec = p.precision();
  MPScalar pi = MPScalar::pi(prec);
  MPScalar d = p.u - p.v;
  MPScalar s = p.u + p.v;
  switch (p.model) {
    case Model::SixV:
      check_common_eta(p);
      if (!(d > p.eta && d < pi - p.eta))
        throw DomainError("6V: need eta < u-v < pi-eta");
      return;
    case Model::SixVPrime:
      check_common_eta(p);
      if (!(d > p.eta && d < pi - p.eta))
        throw DomainError("6V': need eta < u-v < pi-eta");
      if (!(s > p.eta - pi && s < -p.eta))
        throw DomainError("6V': need eta-pi < u+v < -eta");
      return;
    case Model::TwentyV:
      check_common_eta(p);
      if (!(d > p.eta && d < pi - p.eta))
        throw DomainError("20V: need eta < u-v < pi-eta");
      if (!(s > p.eta - pi && s < -p.eta))
        throw DomainError("20V: need eta-pi < u+v < -eta");
      if (!(p.u > MPScalar(0L, prec) && p.u < pi / MPScalar(2L, prec) - p.eta))
        throw DomainError("20V: need 0 < u < pi/2 - eta");
      return;
    case Model::DT: {
      // Fixed to the uniform 20V point.
      ModelParams ref = named_point(NamedPoint::Uniform20V, prec);
      MPScalar tol(1L, prec);
      mpfr_mul_2si(tol.raw(), tol.raw(), -40, MPFR_RNDN);
      if (abs(p.eta - ref.eta) > tol || abs(p.u - ref.u) > tol || abs(p.v - ref.v) > tol ||
          abs(p.nu - ref.nu) > tol)
        throw DomainError("DT: parameters are fixed to the uniform 20V point");
      return;
    }
  }
}

bool in_domain(const ModelParams& p) {
  try {
    check_domain(p);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

WeightTable weight_table(const ModelParams& p) {
  check_domain(p);
  WeightTable w;
  mpfr_prec_t prec = p.precision();
  MPScalar two_eta = p.eta + p.eta;
  MPScalar d = p.u - p.v;
  MPScalar s = p.u + p.v;
  switch (p.model) {
    case Model::SixV:
      w.a = p.rho * sin(d + p.eta);
      w.b = p.rho * sin(d - p.eta);
      w.c = p.rho * sin(two_eta);
      return w;
    case Model::SixVPrime:
      w.a_o = p.rho_o * sin(d + p.eta);
      w.b_o = p.rho_o * sin(d - p.eta);
      w.c_o = p.rho_o * sin(two_eta);
      w.a_e = p.rho_e * sin(p.eta - s);
      w.b_e = p.rho_e * sin(-s - p.eta);
      w.c_e = p.rho_e * sin(two_eta);
      return w;
    case Model::TwentyV:
    case Model::DT: {
      MPScalar s2u = sin(p.u + p.u);
      MPScalar s2ue = sin(p.u + p.u + two_eta);
      MPScalar s2e = sin(two_eta);
      w.omega.clear();
      w.omega.push_back(p.nu * sin(d + p.eta) * sin(p.eta - s) * s2ue);
      w.omega.push_back(p.nu * sin(d - p.eta) * sin(-s - p.eta) * s2ue);
      w.omega.push_back(p.nu * sin(d - p.eta) * s2ue * s2e);
      w.omega.push_back(p.nu * (s2e * s2e * s2e + sin(d + p.eta) * sin(-s - p.eta) * s2u));
      w.omega.push_back(p.nu * s2ue * sin(p.eta - s) * s2e);
      w.omega.push_back(p.nu * sin(d - p.eta) * sin(p.eta - s) * s2e);
      w.omega.push_back(p.nu * sin(d - p.eta) * sin(p.eta - s) * s2u);
      return w;
    }
  }
  throw DomainError("unknown model");
}

mpfr_prec_t default_precision_bits(int n) {
  const char* env = std::getenv("ARCTIC_PRECISION_BITS");
  if (env) {
    long bits = std::atol(env);
    if (bits >= MPScalar::kMinPrecision) return static_cast<mpfr_prec_t>(bits);
  }
  mpfr_prec_t p = 64 + 12 * static_cast<mpfr_prec_t>(n > 0 ? n : 0);
  return p < 256 ? 256 : p;
}

ModelParams random_in_domain(Model m, std::mt19937_64& rng, mpfr_prec_t prec, double margin) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double pi = 3.14159265358979323846;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    double eta = margin + unif(rng) * (pi / 2 - 2 * margin);
    double dlo = eta + margin, dhi = pi - eta - margin;
    if (dhi <= dlo) continue;
    double d = dlo + unif(rng) * (dhi - dlo);
    ModelParams p;
    if (m == Model::SixV) {
      p = make_params(m, MPScalar(eta, prec), MPScalar(d, prec), MPScalar(0.0, prec));
    } else {
      double slo = eta - pi + margin, shi = -eta - margin;
      if (shi <= slo) continue;
      double s = slo + unif(rng) * (shi - slo);
      double u = (d + s) / 2, v = (s - d) / 2;
      if (m == Model::TwentyV && !(u > margin / 2 && u < pi / 2 - eta - margin / 2)) continue;
      p = make_params(m, MPScalar(eta, prec), MPScalar(u, prec), MPScalar(v, prec));
    }
    if (in_domain(p)) return p;
  }
  throw DomainError("random_in_domain: could not sample a point");
}

}  // namespace arctic
