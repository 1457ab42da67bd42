#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arctic/derivtower.hpp"
#include "arctic/dual.hpp"
#include "arctic/mp.hpp"

using namespace arctic;

namespace {

const mpfr_prec_t P = 256;

MPScalar mp(double x) { return MPScalar(x, P); }
MPScalar tiny(int log2_eps) {
  MPScalar e(1L, P);
  mpfr_mul_2si(e.raw(), e.raw(), log2_eps, MPFR_RNDN);
  return e;
}
bool close_rel(const MPScalar& a, const MPScalar& b, double tol) {
  MPScalar scale = abs(a) > abs(b) ? abs(a) : abs(b);
  if (scale.is_zero()) return true;
  return (abs(a - b) / scale).to_double() < tol;
}

}  // namespace

TEST_CASE("cot derivative polynomials match the stated low orders") {
  DerivTower t = cot_derivative_polynomials(2);
  CHECK(t.poly(0) == std::vector<mpz_class>{0, 1});
  CHECK(t.poly(1) == std::vector<mpz_class>{-1, 0, -1});
  CHECK(t.poly(2) == std::vector<mpz_class>{0, 2, 0, 2});
  CHECK_THROWS_AS(cot_derivative_polynomials(-1), DomainError);
}

TEST_CASE("P_j reproduces repeated numeric differentiation of cot") {
  DerivTower t = cot_derivative_polynomials(12);
  MPScalar x = MPScalar::pi(P) / MPScalar(4L, P);
  MPScalar h = tiny(-60);
  for (int j = 1; j <= 12; ++j) {
    MPScalar fd = (t.eval(j - 1, cot(x + h)) - t.eval(j - 1, cot(x - h))) / (h + h);
    CHECK(close_rel(fd, t.eval(j, cot(x)), 1e-25));
  }
}

TEST_CASE("m_derivatives stated values") {
  MPScalar pi = MPScalar::pi(P);
  auto md = m_derivatives(pi / mp(2), pi / mp(6), 1, P);
  CHECK(close_rel(md[0], mp(4) / mp(3), 1e-70));
  CHECK(abs(md[1]).to_double() < 1e-70);  // even kernel about w = pi/2
  auto md2 = m_derivatives(pi / mp(2), pi / mp(4), 0, P);
  CHECK(close_rel(md2[0], mp(2), 1e-70));
  CHECK_THROWS_AS(m_derivatives(pi / mp(6), pi / mp(6), 0, P), SingularityError);
}

TEST_CASE("m_derivatives vs central finite differences, random points") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> ueta(0.15, 1.4), uw(0.0, 1.0);
  MPScalar h = tiny(-40);
  for (int trial = 0; trial < 20; ++trial) {
    double eta = ueta(rng);
    double w = eta + 0.1 + uw(rng) * (3.14159265 - 2 * eta - 0.2);
    MPScalar ww = mp(w), ee = mp(eta);
    auto md = m_derivatives(ww, ee, 40, P);
    auto mdp = m_derivatives(ww + h, ee, 39, P);
    auto mdm = m_derivatives(ww - h, ee, 39, P);
    for (int k = 1; k <= 40; ++k) {
      MPScalar fd = (mdp[k - 1] - mdm[k - 1]) / (h + h);
      CHECK(close_rel(fd, md[k], 1e-15));
    }
  }
}

TEST_CASE("mU derivative matrix") {
  MPScalar pi = MPScalar::pi(P);
  MPScalar eta = pi / mp(4), u = pi / mp(8), v = -pi / mp(2);
  auto M = mU_derivative_matrix(u, v, eta, 1, P);
  CHECK(abs(M[0][0]).to_double() < 1e-70);  // free-fermion closed form with sin(-pi)=0

  // entry (0,1) = -d_v m_U, cross-checked by central differences.
  MPScalar eta2 = mp(0.4), u2 = mp(0.3), v2 = mp(-1.2);
  auto M2 = mU_derivative_matrix(u2, v2, eta2, 2, P);
  MPScalar h = tiny(-40);
  auto mu_at = [&](const MPScalar& vv) {
    auto a = m_derivatives(u2 - vv, eta2, 0, P);
    auto b = m_derivatives(u2 + vv, eta2, 0, P);
    return a[0] - b[0];
  };
  MPScalar dvm = (mu_at(v2 + h) - mu_at(v2 - h)) / (h + h);
  CHECK(close_rel(M2[0][1], -dvm, 1e-12));
  CHECK(close_rel(M2[0][0], mu_at(v2), 1e-60));
}

TEST_CASE("dual tangents match finite differences") {
  MPScalar x0 = mp(0.7321), h = tiny(-40);
  Dual<MPScalar> x = Dual<MPScalar>::variable(x0, 0, 1);
  auto fd_check = [&](auto f) {
    auto d = f(x);
    MPScalar fd = (f(Dual<MPScalar>::constant(x0 + h, 0)).val -
                   f(Dual<MPScalar>::constant(x0 - h, 0)).val) /
                  (h + h);
    CHECK(close_rel(d.tan[0], fd, 1e-12));
  };
  fd_check([](const Dual<MPScalar>& t) { return sin(t); });
  fd_check([](const Dual<MPScalar>& t) { return cos(t); });
  fd_check([](const Dual<MPScalar>& t) { return cot(t); });
  fd_check([](const Dual<MPScalar>& t) { return log(t); });
  fd_check([](const Dual<MPScalar>& t) { return t * sin(t); });
  fd_check([](const Dual<MPScalar>& t) { return cos(t) / t; });
}

TEST_CASE("nested duals give second derivatives") {
  MPScalar x0 = mp(0.31);
  using D1 = Dual<MPScalar>;
  using D2 = Dual<D1>;
  D2 x(D1(x0, {MPScalar(1L, P)}), {D1(MPScalar(1L, P), {MPScalar(0L, P)})});
  D2 s = sin(x);
  CHECK(close_rel(s.val.val, sin(x0), 1e-70));
  CHECK(close_rel(s.val.tan[0], cos(x0), 1e-70));
  CHECK(close_rel(s.tan[0].tan[0], -sin(x0), 1e-70));
}

TEST_CASE("arithmetic uses the larger operand precision") {
  MPScalar a(1L, 128), b(1L, 512);
  CHECK((a + b).precision() == 512);
  CHECK((a * b).precision() == 512);
  CHECK(MPScalar(1L, 64).precision() == 128);  // clamped to the minimum
}
