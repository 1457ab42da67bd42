#include <doctest.h>

#include <random>

#include "arctic/asymptotics.hpp"
#include "arctic/asymptotics_impl.hpp"
#include "arctic/enumerate.hpp"
#include "arctic/partition.hpp"

using namespace arctic;

namespace {

const mpfr_prec_t P = 320;

bool close_rel(const MPScalar& a, const MPScalar& b, double tol) {
  MPScalar scale = abs(a) > abs(b) ? abs(a) : abs(b);
  if (scale.is_zero()) return true;
  return (abs(a - b) / scale).to_double() < tol;
}

MPScalar frac_pi(long num, long den, mpfr_prec_t prec = P) {
  return MPScalar::pi(prec) * MPScalar(num, prec) / MPScalar(den, prec);
}

}  // namespace

TEST_CASE("alpha exponent") {
  CHECK(close_rel(alpha_exponent(frac_pi(1, 6)), MPScalar(1.5, P), 1e-70));
  CHECK(close_rel(alpha_exponent(frac_pi(1, 4)), MPScalar(2L, P), 1e-70));
  CHECK(close_rel(alpha_exponent(frac_pi(1, 8)),
                  MPScalar(4L, P) / MPScalar(3L, P), 1e-70));
  CHECK_THROWS_AS(alpha_exponent(MPScalar(2L, P)), DomainError);
}

TEST_CASE("free energy values") {
  // 20V uniform point: e^f = 3^(9/4)/2^(9/2).
  ModelParams up = named_point(NamedPoint::Uniform20V, P);
  MPScalar f = free_energy(up, P);
  MPScalar ref = log(pow(MPScalar(3L, P), 9) / pow(MPScalar(2L, P), 18)) / MPScalar(4L, P);
  CHECK(close_rel(f, ref, 1e-60));
  CHECK(f.to_double() == doctest::Approx(-0.6472847).epsilon(1e-6));

  // 6V at eta=pi/4, u-v=pi/2, rho=1: f = -log(2 sin(3pi/4) sin(pi/4) / sin(pi/2)) = 0.
  ModelParams p6 = make_params(Model::SixV, frac_pi(1, 4), frac_pi(1, 2), MPScalar(0L, P));
  CHECK(abs(free_energy(p6, P)).to_double() < 1e-60);

  // 6V' u -> 0 removable limit vs two-sided numeric limit.
  ModelParams base = make_params(Model::SixVPrime, frac_pi(1, 6), MPScalar(0L, P), -frac_pi(1, 2));
  MPScalar f0 = free_energy(base, P);
  ModelParams pp = base, pm = base;
  pp.u = MPScalar(1e-8, P);
  pm.u = MPScalar(-1e-8, P);
  MPScalar favg = (free_energy(pp, P) + free_energy(pm, P)) / MPScalar(2L, P);
  CHECK(close_rel(f0, favg, 1e-10));
}

TEST_CASE("free energy convergence for 20V (product formula)") {
  ModelParams up = named_point(NamedPoint::Uniform20V, P);
  MPScalar f = free_energy(up, P);
  MPScalar prev(1e9, P);
  for (int N : {8, 16, 32}) {
    MPScalar z(z20v_product_formula(N), P);
    MPScalar e = abs(-log(z) / MPScalar(static_cast<long>(N) * N, P) - f);
    CHECK(e < prev);
    prev = e;
    if (N == 32) CHECK(e.to_double() < 0.05);
  }
}

TEST_CASE("one-point exponent limits") {
  ModelParams vs = named_point(NamedPoint::VSASM, P);
  CHECK(abs(one_point_exponent(vs, MPScalar(1e-25, P), ExponentKind::Psi, P)).to_double() <
        1e-20);
  // 6V: the reduced exponent has e^psi -> 0 as xi -> (u-v)-eta.
  ModelParams asmp = named_point(NamedPoint::ASM, P);
  MPScalar xi_edge = asmp.u - asmp.v - asmp.eta - MPScalar(1e-10, P);
  MPScalar ep = impl::exp_psi6v_t(asmp.u - asmp.v, asmp.eta, xi_edge);
  CHECK(abs(ep).to_double() < 1e-8);
}

TEST_CASE("one-point exponent matches finite-size determinants") {
  // psi^6V at the ASM point, N = 32.
  ModelParams asmp = named_point(NamedPoint::ASM, P);
  mpfr_prec_t prec = default_precision_bits(33);
  for (double x : {-0.3, -0.6}) {
    MPScalar xi(x, prec);
    MPScalar h = one_point(asmp.with_precision(prec), 32, xi, prec);
    MPScalar est = -log(h) / MPScalar(32L, prec);
    MPScalar psi = one_point_exponent(asmp, xi, ExponentKind::Psi, P);
    CHECK(abs(est.with_precision(P) - psi).to_double() < 0.05);
  }
  // psi^6V' at the VSASM point, N = 32.
  ModelParams vs = named_point(NamedPoint::VSASM, P);
  MPScalar xi(-0.4, P);
  MPScalar h = one_point(vs, 32, xi, default_precision_bits(33));
  MPScalar est = -log(h) / MPScalar(32L, P);
  MPScalar psi = one_point_exponent(vs, xi, ExponentKind::Psi, P);
  CHECK(abs(est - psi).to_double() < 0.05);
}

TEST_CASE("phi/psi consistency") {
  std::mt19937_64 rng(31);
  ModelParams p = random_in_domain(Model::SixVPrime, rng, P);
  MPScalar xi(-0.27, P);
  MPScalar psi = one_point_exponent(p, xi, ExponentKind::Psi, P);
  MPScalar phi = one_point_exponent(p, xi, ExponentKind::Phi, P);
  MPScalar u = p.u, v = p.v, eta = p.eta;
  MPScalar ao = sin(u - v - xi + eta) / sin(u - v + eta);
  MPScalar ae = sin(u + v + xi - eta) / sin(u + v - eta);
  CHECK(close_rel(phi, psi + log(ao * ae), 1e-40));

  ModelParams p20 = random_in_domain(Model::TwentyV, rng, P);
  MPScalar phi20 = one_point_exponent(p20, xi, ExponentKind::Phi, P);
  ModelParams p6 = p20;
  p6.model = Model::SixVPrime;
  MPScalar phi6 = one_point_exponent(p6, xi, ExponentKind::Phi, P);
  u = p20.u;
  v = p20.v;
  eta = p20.eta;
  MPScalar corr = log(sin(u - v - xi - eta) * sin(u - v + eta) /
                      (sin(u - v - xi + eta) * sin(u - v - eta)));
  CHECK(close_rel(phi20, phi6 - corr, 1e-40));
}

TEST_CASE("kappa matches the derivative definition") {
  std::mt19937_64 rng(55);
  MPScalar h(1L, 512);
  mpfr_mul_2si(h.raw(), h.raw(), -100, MPFR_RNDN);
  for (Model m : {Model::SixV, Model::SixVPrime, Model::TwentyV}) {
    ModelParams p = random_in_domain(m, rng, 512);
    MPScalar xi = branch_xi_min(p) * MPScalar(0.4, 512);
    MPScalar tp = (t_of_xi(p, xi + h, 512) - t_of_xi(p, xi - h, 512)) / (h + h);
    MPScalar php = (one_point_exponent(p, xi + h, ExponentKind::Phi, 512) -
                    one_point_exponent(p, xi - h, ExponentKind::Phi, 512)) /
                   (h + h);
    MPScalar mu_eff(m == Model::TwentyV ? 2L : 1L, 512);
    MPScalar k_fd = -t_of_xi(p, xi, 512) / tp * php / mu_eff;
    CHECK(close_rel(k_fd, kappa_of_xi(p, xi, 512), 1e-20));
  }
}

TEST_CASE("saddle data closed forms") {
  ModelParams dt = named_point(NamedPoint::Uniform20V, 512);
  dt.model = Model::DT;
  MPScalar xi = -frac_pi(1, 8, 512);
  SaddleData sd = saddle_data(dt, xi, 512);
  // kappa/lambda = -cot(2 xi) = 1 at xi = -pi/8.
  CHECK(close_rel(sd.kappa / sd.lambda, MPScalar(1L, 512), 1e-40));
  // p3/kappa = sin(xi)/(sqrt2 sin(xi - pi/4)).
  MPScalar expect = sin(xi) / (sqrt(MPScalar(2L, 512)) * sin(xi - frac_pi(1, 4, 512)));
  CHECK(close_rel(sd.p[0] / sd.kappa, expect, 1e-40));
  // kappa_DT = 2 kappa_20V - 1 at several xi.
  ModelParams tv = named_point(NamedPoint::Uniform20V, 512);
  for (double x : {-0.1, -0.3, -0.5, -0.65, -0.75}) {
    MPScalar xx(x, 512);
    CHECK(close_rel(kappa_of_xi(dt, xx, 512),
                    MPScalar(2L, 512) * kappa_of_xi(tv, xx, 512) - MPScalar(1L, 512), 1e-40));
  }
}

TEST_CASE("saddle residuals vanish") {
  ModelParams asmp = named_point(NamedPoint::ASM, 512);
  for (double x : {-0.5, -1.0}) {
    for (const MPScalar& r : saddle_residuals(asmp, MPScalar(x, 512), 512))
      CHECK(r.to_double() < 1e-30);
  }
  ModelParams p6 = make_params(Model::SixVPrime, frac_pi(1, 3, 512), frac_pi(1, 12, 512),
                               -frac_pi(1, 2, 512));
  for (const MPScalar& r : saddle_residuals(p6, MPScalar(-0.3, 512), 512))
    CHECK(r.to_double() < 1e-25);
  ModelParams up = named_point(NamedPoint::Uniform20V, 512);
  for (const MPScalar& r : saddle_residuals(up, MPScalar(-0.2, 512), 512))
    CHECK(r.to_double() < 1e-25);
  ModelParams dt = up;
  dt.model = Model::DT;
  for (const MPScalar& r : saddle_residuals(dt, MPScalar(-0.4, 512), 512))
    CHECK(r.to_double() < 1e-25);
  // generic points
  std::mt19937_64 rng(808);
  for (Model m : {Model::SixV, Model::SixVPrime, Model::TwentyV}) {
    ModelParams p = random_in_domain(m, rng, 512);
    MPScalar xi = branch_xi_min(p) * MPScalar(0.37, 512);
    for (const MPScalar& r : saddle_residuals(p, xi, 512))
      CHECK(r.to_double() < 1e-25);
  }
}

TEST_CASE("liouville and psi-ODE residuals") {
  ModelParams p6 = make_params(Model::SixV, frac_pi(1, 6, 512), frac_pi(2, 3, 512),
                               MPScalar(0L, 512));
  auto [w6, ode6] = liouville_residuals(p6, MPScalar(-0.3, 512), 512);
  CHECK(w6.to_double() < 1e-30);
  CHECK(ode6.to_double() < 1e-30);

  ModelParams pp = make_params(Model::SixVPrime, frac_pi(1, 5, 512), frac_pi(1, 7, 512),
                               -frac_pi(1, 2, 512));
  for (double x : {-0.2, -0.4, -0.6}) {
    auto [wp, odep] = liouville_residuals(pp, MPScalar(x, 512), 512);
    CHECK(wp.to_double() < 1e-25);
    CHECK(odep.to_double() < 1e-25);
  }
}

TEST_CASE("xi from kappa round trip") {
  ModelParams asmp = named_point(NamedPoint::ASM, P);
  MPScalar lo = branch_xi_min(asmp);
  MPScalar ka = kappa_of_xi(asmp, lo * MPScalar(0.9, P), P);
  MPScalar kb = kappa_of_xi(asmp, lo * MPScalar(0.1, P), P);
  for (double f : {0.2, 0.5, 0.8}) {
    MPScalar kappa = ka + (kb - ka) * MPScalar(f, P);
    MPScalar xi = xi_from_kappa(asmp, kappa, P);
    CHECK(close_rel(kappa_of_xi(asmp, xi, P), kappa, 1e-20));
  }
}
