#include <doctest.h>

#include <random>

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

TEST_CASE("delta base cases and conventions") {
  ModelParams p = make_params(Model::SixV, frac_pi(1, 5), frac_pi(3, 5), MPScalar(0L, P));
  CHECK(delta(p, 0, P).to_double() == 1.0);
  // Delta_1 = m(u-v)
  auto md = m_derivatives(p.u - p.v, p.eta, 0, P);
  CHECK(close_rel(delta(p, 1, P), md[0], 1e-70));

  // 6V: Delta_2 Delta_0 / Delta_1^2 = d_u^2 Log Delta_1, via the recursion.
  auto [r1, r2] = recursion_residual(p, 1, MPScalar(-0.3, P), P);
  CHECK(r1.to_double() < 1e-60);
  CHECK(r2.to_double() < 1e-60);
}

TEST_CASE("free-fermion closed form matches the determinant pipeline") {
  mpfr_prec_t prec = 360;
  MPScalar eta = frac_pi(1, 4, prec);
  MPScalar u = frac_pi(1, 16, prec), v = -frac_pi(5, 8, prec);
  ModelParams p = make_params(Model::SixVPrime, eta, u, v);
  for (int n = 1; n <= 4; ++n) {
    MPScalar lhs = delta(p, n, prec);
    MPScalar rhs = delta_closed_form(ClosedFormCase::FreeFermion, u, v, n, prec);
    CHECK(close_rel(lhs, rhs, 1e-50));
  }
}

TEST_CASE("classical closed form matches the eta=0 determinant") {
  mpfr_prec_t prec = 360;
  MPScalar u(0.45, prec), v(-1.31, prec);
  ModelParams p = make_params(Model::SixVPrime, MPScalar(0L, prec), u, v);
  for (int n = 1; n <= 4; ++n) {
    MPScalar lhs = delta(p, n, prec);
    MPScalar rhs = delta_closed_form(ClosedFormCase::Classical, u, v, n, prec);
    CHECK(close_rel(lhs, rhs, 1e-50));
  }
  // Classical, n=1 equals m_U at eta=0.
  auto md_m = m_derivatives(u - v, MPScalar(0L, prec), 0, prec);
  auto md_p = m_derivatives(u + v, MPScalar(0L, prec), 0, prec);
  CHECK(close_rel(delta_closed_form(ClosedFormCase::Classical, u, v, 1, prec),
                  md_m[0] - md_p[0], 1e-60));
}

TEST_CASE("partition function equals brute-force enumeration") {
  // ASM numbers 1, 2, 7, 42.
  ModelParams asmp = named_point(NamedPoint::ASM, P);
  for (int n = 1; n <= 4; ++n) {
    MPScalar z = partition_fn(asmp, n, P);
    RefinedCountsZ e = enumerate_uniform_counts(Model::SixV, n);
    CHECK(close_rel(z, MPScalar(e.total, P), 1e-40));
  }
  // VSASM numbers 1, 3, 26 (determinant evaluated off the degenerate lines).
  ModelParams vs = named_point(NamedPoint::VSASM, P);
  for (int n = 1; n <= 3; ++n) {
    MPScalar z = partition_fn(vs, n, P);
    RefinedCountsZ e = enumerate_uniform_counts(Model::SixVPrime, n);
    CHECK(close_rel(z, MPScalar(e.total, P), 1e-22));
  }
  // Generic 6V' parameters against the weighted sweep.
  ModelParams g = make_params(Model::SixVPrime, MPScalar(0.5, P), MPScalar(0.17, P),
                              MPScalar(-1.45, P));
  g.rho_o = MPScalar(1.1, P);
  g.rho_e = MPScalar(0.9, P);
  for (int n = 1; n <= 3; ++n) {
    RefinedCountsW e = enumerate_vertex_model(g, n, P);
    CHECK(close_rel(partition_fn(g, n, P), e.total, 1e-40));
  }
}

TEST_CASE("20V partition function: relation to 6V', product formula, enumeration") {
  ModelParams up = named_point(NamedPoint::Uniform20V, P);
  for (int n = 1; n <= 3; ++n) {
    MPScalar z = partition_fn(up, n, P);
    RefinedCountsZ e = enumerate_uniform_counts(Model::TwentyV, n);
    CHECK(close_rel(z, MPScalar(e.total, P), 1e-22));
    CHECK(e.total == z20v_product_formula(n));
  }
  CHECK(z20v_product_formula(4) == 3328);
  CHECK(z20v_product_formula(5) == 678912);
  // 20V partition function vs the weighted sweep at generic parameters.
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 3; ++trial) {
    ModelParams g = random_in_domain(Model::TwentyV, rng, P);
    g.nu = MPScalar(1.3, P);
    for (int n = 1; n <= 3; ++n) {
      RefinedCountsW e = enumerate_vertex_model(g, n, P);
      CHECK(close_rel(partition_fn(g, n, P), e.total, 1e-40));
    }
  }
}

TEST_CASE("larger sizes against enumeration and the product formula") {
  // ASM numbers up to n=7 and VSASM numbers up to n=5.
  ModelParams asmp = named_point(NamedPoint::ASM, P);
  const long asm_counts[] = {1, 2, 7, 42, 429, 7436, 218348};
  for (int n = 5; n <= 7; ++n) {
    RefinedCountsZ e = enumerate_uniform_counts(Model::SixV, n);
    CHECK(e.total == asm_counts[n - 1]);
    CHECK(close_rel(partition_fn(asmp, n, P), MPScalar(e.total, P), 1e-30));
  }
  ModelParams vs = named_point(NamedPoint::VSASM, P);
  const long vsasm_counts[] = {1, 3, 26, 646, 45885};
  for (int n = 4; n <= 5; ++n) {
    RefinedCountsZ e = enumerate_uniform_counts(Model::SixVPrime, n);
    CHECK(e.total == vsasm_counts[n - 1]);
    CHECK(close_rel(partition_fn(vs, n, P), MPScalar(e.total, P), 1e-20));
  }
  // 20V determinant pipeline vs the product formula beyond enumeration range.
  ModelParams up = named_point(NamedPoint::Uniform20V, P);
  for (int n = 6; n <= 8; ++n)
    CHECK(close_rel(partition_fn(up, n, P), MPScalar(z20v_product_formula(n), P), 1e-20));
}

TEST_CASE("refined partition functions and one-point functions") {
  ModelParams asmp = named_point(NamedPoint::ASM, P);
  MPScalar zero(0L, P);
  CHECK(one_point(asmp, 3, zero, P).to_double() == 1.0);
  CHECK(close_rel(refined_partition(asmp, 3, zero, P), partition_fn(asmp, 3, P), 1e-60));

  // 6V refined sum rule at the ASM point, n = 3: Z_nk = (2, 3, 2).
  RefinedCountsZ e = enumerate_uniform_counts(Model::SixV, 3);
  REQUIRE(e.by_exit.size() == 3);
  CHECK(e.by_exit[0] == 2);
  CHECK(e.by_exit[1] == 3);
  CHECK(e.by_exit[2] == 2);
  for (double x : {-0.3, 0.2}) {
    MPScalar xi(x, P);
    MPScalar w = asmp.u - asmp.v, eta = asmp.eta;
    MPScalar ab = sin(w - xi + eta) / sin(w + eta);
    MPScalar bb = sin(w - xi - eta) / sin(w - eta);
    MPScalar rhs(0L, P);
    for (int k = 1; k <= 3; ++k)
      rhs += MPScalar(e.by_exit[k - 1], P) * pow(bb, k - 1) * pow(ab, 3 - k);
    CHECK(close_rel(refined_partition(asmp, 3, xi, P), rhs, 1e-40));
  }
}

TEST_CASE("6V' and 20V refined sum rules against enumeration") {
  ModelParams g = make_params(Model::SixVPrime, MPScalar(0.5, P), MPScalar(0.17, P),
                              MPScalar(-1.45, P));
  int n = 3;
  RefinedCountsW e = enumerate_vertex_model(g, n, P);
  MPScalar u = g.u, v = g.v, eta = g.eta;
  for (double x : {-0.2, 0.15}) {
    MPScalar xi(x, P);
    MPScalar ao = sin(u - v - xi + eta) / sin(u - v + eta);
    MPScalar bo = sin(u - v - xi - eta) / sin(u - v - eta);
    MPScalar ae = sin(u + v + xi - eta) / sin(u + v - eta);
    MPScalar be = sin(u + v + xi + eta) / sin(u + v + eta);
    MPScalar rhs(0L, P);
    for (int j = 1; j <= n; ++j)
      rhs += e.by_exit[2 * j - 2] * pow(bo * be, j - 1) * pow(ae * ao, n - j);
    for (int j = 1; j <= n - 1; ++j)
      rhs += e.by_exit[2 * j - 1] * pow(bo * be, j - 1) * bo * ao * pow(ae * ao, n - j - 1);
    CHECK(close_rel(refined_partition(g, n, xi, P), rhs, 1e-40));
  }

  ModelParams g20 = make_params(Model::TwentyV, MPScalar(0.35, P), MPScalar(0.3, P),
                                MPScalar(-1.3, P));
  n = 2;
  RefinedCountsW e20 = enumerate_vertex_model(g20, n, P);
  u = g20.u;
  v = g20.v;
  eta = g20.eta;
  for (double x : {-0.2, 0.1}) {
    MPScalar xi(x, P);
    MPScalar w0b = sin(u - v - xi + eta) * sin(eta - u - v - xi) /
                   (sin(u - v + eta) * sin(eta - u - v));
    MPScalar w1b = sin(u - v - xi - eta) * sin(-u - v - xi - eta) /
                   (sin(u - v - eta) * sin(-u - v - eta));
    MPScalar w2b = sin(u - v - xi - eta) / sin(u - v - eta);
    MPScalar w4b = sin(eta - u - v - xi) / sin(eta - u - v);
    MPScalar rhs(0L, P);
    for (int k = 1; k <= 2 * n - 1; ++k)
      rhs += (w4b * e20.by_exit_horizontal[k - 1] + w2b * e20.by_exit_diagonal[k - 1]) *
             pow(w0b, 2 * n - k - 1) * pow(w1b, k - 1);
    CHECK(close_rel(refined_partition(g20, n, xi, P), rhs, 1e-40));
  }
}

TEST_CASE("recursion residuals vanish for 6V and 6V'") {
  MPScalar xi(-0.35, P);
  ModelParams asmp = named_point(NamedPoint::ASM, P);
  for (int n = 1; n <= 4; ++n) {
    auto [r1, r2] = recursion_residual(asmp, n, xi, P);
    CHECK(r1.to_double() < 1e-30);
    CHECK(r2.to_double() < 1e-30);
  }
  ModelParams vs = named_point(NamedPoint::VSASM, P);
  for (int n = 1; n <= 4; ++n) {
    auto [r1, r2] = recursion_residual(vs, n, xi, P);
    CHECK(r1.to_double() < 1e-25);
    CHECK(r2.to_double() < 1e-25);
  }
  ModelParams ff = named_point(NamedPoint::FreeFermion6VP, P);
  auto [r1, r2] = recursion_residual(ff, 3, xi, P);
  CHECK(r1.to_double() < 1e-25);
  CHECK(r2.to_double() < 1e-25);
}

TEST_CASE("partition symmetries") {
  std::mt19937_64 rng(4242);
  MPScalar pi = MPScalar::pi(P);
  for (int trial = 0; trial < 4; ++trial) {
    ModelParams p = random_in_domain(Model::SixV, rng, P);
    ModelParams q = p;
    q.u = pi - (p.u - p.v) + p.v;  // u-v -> pi-(u-v)
    for (int n = 1; n <= 4; ++n)
      CHECK(close_rel(partition_fn(p, n, P), partition_fn(q, n, P), 1e-30));
  }
  for (int trial = 0; trial < 4; ++trial) {
    ModelParams p = random_in_domain(Model::SixVPrime, rng, P);
    ModelParams q = p;
    q.u = -p.u;
    q.v = -pi - p.v;
    for (int n = 1; n <= 4; ++n)
      CHECK(close_rel(partition_fn(p, n, P), partition_fn(q, n, P), 1e-30));
  }
}

TEST_CASE("free-fermion factorization of the 6V' partition function") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  MPScalar eta = frac_pi(1, 4);
  for (int trial = 0; trial < 3; ++trial) {
    double d = 0.9 + unif(rng) * 1.3;   // u-v in (eta, pi-eta)
    double s = -2.2 + unif(rng) * 1.3;  // u+v in (eta-pi, -eta)
    ModelParams p = make_params(Model::SixVPrime, eta, MPScalar((d + s) / 2, P),
                                MPScalar((s - d) / 2, P));
    if (!in_domain(p)) continue;
    for (int n = 1; n <= 5; ++n) {
      MPScalar lhs = partition_fn(p, n, P);
      // In-domain cos2v < 0; the positive partition function factorizes
      // through |cos2u cos2v|.
      MPScalar rhs = pow(-cos(p.u + p.u) * cos(p.v + p.v), static_cast<long>(n) * (n - 1) / 2);
      CHECK(close_rel(lhs, rhs, 1e-35));
    }
  }
}

TEST_CASE("delta positivity on a parameter grid") {
  for (int ie = 1; ie <= 3; ++ie)
    for (int id = 1; id <= 3; ++id) {
      double eta = 0.3 + 0.3 * ie;
      if (eta >= 1.55) continue;
      double d = eta + (3.14159 - 2 * eta) * id / 4.0;
      ModelParams p = make_params(Model::SixV, MPScalar(eta, P), MPScalar(d, P), MPScalar(0L, P));
      for (int n = 1; n <= 5; ++n) CHECK(delta(p, n, P).sign() > 0);
    }
}

TEST_CASE("argument validation") {
  ModelParams bad = make_params(Model::SixV, MPScalar(0.4, P), MPScalar(0.1, P), MPScalar(0L, P));
  CHECK_THROWS_AS(partition_fn(bad, 2, P), DomainError);
  ModelParams dt = named_point(NamedPoint::Uniform20V, P);
  dt.model = Model::DT;
  CHECK(partition_fn(dt, 2, P).to_double() == doctest::Approx(4.0));
  dt.u = MPScalar(0.2, P);
  CHECK_THROWS_AS(partition_fn(dt, 2, P), DomainError);
}
