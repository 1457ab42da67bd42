#include "arctic/asymptotics.hpp"

#include "arctic/errors.hpp"

namespace arctic {

namespace {

using D1 = Dual<MPScalar>;
using D2 = Dual<Dual<MPScalar>>;

ModelParams effective(const ModelParams& params, mpfr_prec_t prec) {
  if (params.model == Model::DT) return named_point(NamedPoint::Uniform20V, prec);
  return params.with_precision(prec);
}

// Nudges v off the removable line v = -pi/2 for expressions (W, e^psi) that
// are individually singular there even though their defining relations hold
// on either side. The shift goes to the side where sin(2u) sin(2v) > 0 (the
// region where the determinants and W are positive).
MPScalar off_line_v(const MPScalar& u, const MPScalar& v, mpfr_prec_t prec) {
  MPScalar pi = MPScalar::pi(prec);
  MPScalar pole = -pi / MPScalar(2L, prec);
  MPScalar guard(1L, prec);
  mpfr_mul_2si(guard.raw(), guard.raw(), -40, MPFR_RNDN);
  if (abs(v - pole) < guard) {
    return sin(u + u).sign() >= 0 ? pole - guard : pole + guard;
  }
  return v;
}

}  // namespace

MPScalar alpha_exponent(const MPScalar& eta) {
  mpfr_prec_t prec = eta.precision();
  MPScalar pi = MPScalar::pi(prec);
  MPScalar half_pi = pi / MPScalar(2L, prec);
  if (!(eta > MPScalar(0L, prec) && eta < half_pi))
    throw DomainError("alpha_exponent: eta must lie in (0, pi/2)");
  return impl::alpha_t(eta);
}

MPScalar free_energy(const ModelParams& params, mpfr_prec_t precision) {
  check_domain(params);
  mpfr_prec_t prec = precision + 64;
  ModelParams p = effective(params, prec);
  switch (params.model) {
    case Model::SixV:
      return impl::f6v_t(p.u - p.v, p.eta, p.rho).with_precision(precision);
    case Model::SixVPrime:
      return impl::f6vp_t(p.u, p.v, p.eta, p.rho_o, p.rho_e).with_precision(precision);
    case Model::TwentyV:
    case Model::DT:
      return impl::f20v_t(p.u, p.v, p.eta, p.nu, MPScalar(1L, prec), MPScalar(1L, prec))
          .with_precision(precision);
  }
  throw DomainError("free_energy: unknown model");
}

MPScalar one_point_exponent(const ModelParams& params, const MPScalar& xi, ExponentKind kind,
                            mpfr_prec_t precision) {
  check_domain(params);
  mpfr_prec_t prec = precision + 64;
  ModelParams p = effective(params, prec);
  MPScalar xx = xi.with_precision(prec);
  switch (params.model) {
    case Model::SixV: {
      MPScalar w = p.u - p.v;
      return (kind == ExponentKind::Psi ? impl::psi6v_t(w, p.eta, xx)
                                        : impl::phi6v_t(w, p.eta, xx))
          .with_precision(precision);
    }
    case Model::SixVPrime:
      return (kind == ExponentKind::Psi ? impl::psi6vp_t(p.u, p.v, p.eta, xx)
                                        : impl::phi6vp_t(p.u, p.v, p.eta, xx))
          .with_precision(precision);
    case Model::TwentyV:
    case Model::DT:
      return (kind == ExponentKind::Psi ? impl::psi20v_t(p.u, p.v, p.eta, xx)
                                        : impl::phi20v_t(p.u, p.v, p.eta, xx))
          .with_precision(precision);
  }
  throw DomainError("one_point_exponent: unknown model");
}

MPScalar branch_xi_min(const ModelParams& params) {
  mpfr_prec_t prec = params.precision();
  MPScalar pi = MPScalar::pi(prec);
  switch (params.model) {
    case Model::SixV:
      return params.u - params.v + params.eta - pi;
    case Model::SixVPrime:
      return params.eta + abs(params.u) - params.v - pi;
    case Model::TwentyV:
      return params.eta + params.u - params.v - pi;
    case Model::DT:
      // NE portion; the analytic continuation extends to -3 pi/8.
      return -pi / MPScalar(4L, prec);
  }
  throw DomainError("branch_xi_min: unknown model");
}

MPScalar t_of_xi(const ModelParams& params, const MPScalar& xi, mpfr_prec_t precision) {
  ModelParams p = effective(params, precision);
  MPScalar xx = xi.with_precision(precision);
  if (params.model == Model::SixV) return impl::t6v_t(p.u - p.v, p.eta, xx);
  return impl::t6vp_t(p.u, p.v, p.eta, xx);
}

MPScalar kappa_of_xi(const ModelParams& params, const MPScalar& xi, mpfr_prec_t precision) {
  ModelParams p = effective(params, precision);
  MPScalar xx = xi.with_precision(precision);
  switch (params.model) {
    case Model::SixV: return impl::kappa6v_t(p.u - p.v, p.eta, xx);
    case Model::SixVPrime: return impl::kappa6vp_t(p.u, p.v, p.eta, xx);
    case Model::TwentyV: return impl::kappa20v_t(p.u, p.v, p.eta, xx);
    case Model::DT: return impl::kappadt_t(p.u, p.v, p.eta, xx);
  }
  throw DomainError("kappa_of_xi: unknown model");
}

MPScalar lambda_of_xi(const ModelParams& params, const MPScalar& xi, mpfr_prec_t precision) {
  ModelParams p = effective(params, precision);
  MPScalar xx = xi.with_precision(precision);
  switch (params.model) {
    case Model::SixV: return impl::lambda6v_t(p.u - p.v, p.eta, xx);
    case Model::SixVPrime: return impl::lambda6vp_t(p.u, p.v, p.eta, xx);
    case Model::TwentyV: return impl::lambda20v_t(p.u, p.v, p.eta, xx);
    case Model::DT:
      return impl::kappadt_t(p.u, p.v, p.eta, xx) / impl::Adt_t(xx);
  }
  throw DomainError("lambda_of_xi: unknown model");
}

SaddleData saddle_data(const ModelParams& params, const MPScalar& xi, mpfr_prec_t precision) {
  check_domain(params);
  mpfr_prec_t prec = precision + 64;
  ModelParams p = effective(params, prec);
  MPScalar xx = xi.with_precision(prec);
  MPScalar s2e = sin(p.eta + p.eta);
  SaddleData out;
  out.xi = xi.with_precision(precision);
  out.t = t_of_xi(params, xx, prec).with_precision(precision);
  MPScalar k = kappa_of_xi(params, xx, prec);
  out.kappa = k.with_precision(precision);
  out.lambda = lambda_of_xi(params, xx, prec).with_precision(precision);
  switch (params.model) {
    case Model::SixV: {
      MPScalar w = p.u - p.v;
      MPScalar p2 = k * sin(w - p.eta - p.eta - p.eta) * sin(xx) / (sin(w - xx - p.eta) * s2e);
      out.p.push_back(p2.with_precision(precision));
      break;
    }
    case Model::SixVPrime: {
      MPScalar u = p.u, v = p.v, eta = p.eta;
      MPScalar p2 = -k * sin(u + v + eta) * sin(xx) / (s2e * sin(u + v - eta + xx));
      MPScalar p3 = k * sin(u - v - eta - eta - eta) * sin(xx) / (s2e * sin(u - v - eta - xx));
      MPScalar p4 = k * sin(u + v + eta + eta + eta) * sin(xx) / (s2e * sin(u + v + eta + xx));
      out.p.push_back(p2.with_precision(precision));
      out.p.push_back(p3.with_precision(precision));
      out.p.push_back(p4.with_precision(precision));
      break;
    }
    case Model::TwentyV:
    case Model::DT: {
      MPScalar u = p.u, v = p.v, eta = p.eta;
      if (params.model == Model::DT) {
        // DT saddle involves a single fraction p3 of diagonal steps.
        MPScalar t = out.t.with_precision(prec);
        MPScalar one(1L, prec);
        MPScalar p3 = k * (t - one) / (t + t);
        out.p.push_back(p3.with_precision(precision));
        break;
      }
      MPScalar two(2L, prec);
      MPScalar s1 = sin(u - v - xx - eta), s2 = sin(u + v + xx + eta);
      MPScalar s3 = sin(u - v - xx + eta), s4 = sin(u + v + xx - eta);
      MPScalar D1 = cos(u + u) * cos(u + v + eta) - cos(eta + eta) * cos(u - v - xx - xx + eta);
      MPScalar D2 = cos(eta + eta) - cos(u + v + eta) * cos(u + v + xx + xx - eta);
      MPScalar sAb = sin(u - v - eta), sB = sin(u + v + eta);
      MPScalar c2u = cos(u + u);
      MPScalar p3 = k * (two * sin(xx - eta - eta) * sin(xx) * s4 * s2 / (s2e * sAb * D1)) *
                    ((c2u * c2u - cos(MPScalar(4L, prec) * eta) -
                      sin(u + u) * sin(v + v + eta + eta)) /
                     D2);
      MPScalar p4 = k * two *
                    (sin(u + u) * sin(u + v + eta + eta + eta) * s3 / (s2e * s2e * s1 * D1)) *
                    (sin(xx - eta - eta) * sin(xx) * s4 * s4 / D2);
      MPScalar p5 = k * (two * sin(u + u - eta - eta) * sB / (s2e * s2e * D1)) *
                    (sin(xx) * sin(xx) * s2 * s2 / D2);
      MPScalar p6 = -k *
                    (two * sin(u + u - eta - eta) * sin(u - v - eta - eta - eta) *
                     sin(u + v + eta + eta + eta) * sin(xx) * sin(xx) / (s2e * s2e * sAb * D1)) *
                    (s3 * s4 * s2 / (s1 * D2));
      out.p.push_back(p3.with_precision(precision));
      out.p.push_back(p4.with_precision(precision));
      out.p.push_back(p5.with_precision(precision));
      out.p.push_back(p6.with_precision(precision));
      break;
    }
  }
  return out;
}

namespace {

// d/dxi S_0 = mu_eff * kappa * t'/t + phi', by dual propagation.
MPScalar dxi_action(const ModelParams& params, const MPScalar& xi, mpfr_prec_t prec) {
  ModelParams p = effective(params, prec);
  D1 xd(xi.with_precision(prec), {MPScalar(1L, prec)});
  D1 uc = D1::constant(p.u, 1), vc = D1::constant(p.v, 1), ec = D1::constant(p.eta, 1);
  D1 t(MPScalar(0L, prec)), phi(MPScalar(0L, prec));
  MPScalar coeff = kappa_of_xi(params, xi, prec);
  switch (params.model) {
    case Model::SixV:
      t = impl::t6v_t(uc - vc, ec, xd);
      phi = impl::phi6v_t(uc - vc, ec, xd);
      break;
    case Model::SixVPrime:
      t = impl::t6vp_t(uc, vc, ec, xd);
      phi = impl::phi6vp_t(uc, vc, ec, xd);
      break;
    case Model::TwentyV:
      t = impl::t6vp_t(uc, vc, ec, xd);
      phi = impl::phi20v_t(uc, vc, ec, xd);
      coeff = coeff + coeff;  // 2 kappa
      break;
    case Model::DT:
      t = impl::t6vp_t(uc, vc, ec, xd);
      phi = impl::phi20v_t(uc, vc, ec, xd);
      coeff = coeff + MPScalar(1L, prec);  // (1 + kappa_DT)
      break;
  }
  return coeff * t.tan[0] / t.val + phi.tan[0];
}

}  // namespace

std::vector<MPScalar> saddle_residuals(const ModelParams& params, const MPScalar& xi,
                                       mpfr_prec_t precision) {
  check_domain(params);
  mpfr_prec_t prec = precision + 96;
  ModelParams p = effective(params, prec);
  SaddleData sd = saddle_data(params, xi, prec);
  MPScalar k = sd.kappa, lam = sd.lambda, t = sd.t;
  std::vector<MPScalar> res;
  switch (params.model) {
    case Model::SixV: {
      MPScalar w = p.u - p.v;
      MPScalar g1 = sin(w - p.eta) / sin(w + p.eta);
      MPScalar c0 = sin(p.eta + p.eta) / sin(w + p.eta);
      MPScalar g2 = (c0 * c0 - g1 * g1) / g1;
      MPScalar p2 = sd.p[0];
      res.push_back(t * (k - p2) - g1 * (k + lam - p2));
      res.push_back(g1 * p2 * (k + lam - p2) - g2 * (k - p2) * (lam - p2));
      break;
    }
    case Model::SixVPrime: {
      MPScalar u = p.u, v = p.v, eta = p.eta, s2e = sin(p.eta + p.eta);
      MPScalar g1 = sin(u - v - eta) / sin(u - v + eta);
      MPScalar c0 = s2e / sin(u - v + eta);
      MPScalar g2 = sin(u + v + eta) / sin(u + v - eta);
      MPScalar c1 = s2e / sin(eta - u - v);
      MPScalar g3 = (c0 * c0 - g1 * g1) / g1;
      MPScalar g4 = (c1 * c1 - g2 * g2) / g2;
      MPScalar p2 = sd.p[0], p3 = sd.p[1], p4 = sd.p[2];
      MPScalar Lm = lam - p2 - p3 - p4;
      MPScalar Km = k + Lm;
      res.push_back(t * (p3 - k) * (p4 - k) - g1 * g2 * (p2 + k) * Km);
      res.push_back(g1 * p2 * Km - g2 * (p2 + k) * Lm);
      res.push_back(g1 * p3 * Km - g3 * (k - p3) * Lm);
      res.push_back(g1 * p4 * Km - g4 * (k - p4) * Lm);
      break;
    }
    case Model::TwentyV:
    case Model::DT: {
      if (params.model == Model::DT) {
        MPScalar p3 = sd.p[0];
        res.push_back(t * (k - p3) - (k + lam - p3));
        res.push_back(p3 * (k + lam - p3) - (k - p3) * (lam - p3));
        break;
      }
      WeightTable wt = weight_table(p);
      const auto& w = wt.omega;
      MPScalar w0sq = w[0] * w[0];
      MPScalar a1 = w[1] / w[0];
      MPScalar a2 = w[6] / w[0];
      MPScalar a3 = (w[0] * w[3] + w[4] * w[4] - w[1] * w[6]) / w0sq;
      MPScalar a4 = (w[2] * w[2] - w[1] * w[3]) / w0sq;
      MPScalar a5 = (w[5] * w[5] - w[6] * w[3]) / w0sq;
      MPScalar a6 = (MPScalar(2L, prec) * w[2] * w[4] * w[5] + w[1] * w[6] * w[3] -
                     w[3] * w[4] * w[4] - w[1] * w[5] * w[5] - w[6] * w[2] * w[2]) /
                    (w0sq * w[0]);
      MPScalar p3 = sd.p[0], p4 = sd.p[1], p5 = sd.p[2], p6 = sd.p[3];
      MPScalar two(2L, prec), three(3L, prec);
      MPScalar T1 = two * k + lam - p3 - two * p4 - two * p5 - three * p6;
      MPScalar T2 = two * k - p3 - two * p4 - p5 - two * p6;
      MPScalar T3 = lam - p3 - p4 - two * p5 - two * p6;
      res.push_back(t * T2 - a1 * T1);
      res.push_back(a1 * a2 * p3 * T1 - a3 * T2 * T3);
      res.push_back(a1 * a1 * a2 * p4 * T1 * T1 - a4 * T2 * T2 * T3);
      res.push_back(a1 * a2 * a2 * p5 * T1 * T1 - a5 * T2 * T3 * T3);
      res.push_back(a1 * a1 * a2 * a2 * p6 * T1 * T1 * T1 - a6 * T2 * T2 * T3 * T3);
      break;
    }
  }
  res.push_back(dxi_action(params, xi.with_precision(prec), prec));
  for (auto& r : res) r = abs(r).with_precision(precision);
  return res;
}

std::pair<MPScalar, MPScalar> liouville_residuals(const ModelParams& params, const MPScalar& xi,
                                                  mpfr_prec_t precision) {
  check_domain(params);
  mpfr_prec_t prec = precision + 128;
  ModelParams p = effective(params, prec);
  MPScalar one(1L, prec);
  if (params.model == Model::SixV) {
    // W W'' - (W')^2 = -1 for W = sin(alpha(w-eta))/alpha.
    MPScalar w = p.u - p.v;
    D1 w_in(w, {MPScalar(1L, prec)});
    D2 wd(w_in, {D1(MPScalar(1L, prec), {MPScalar(0L, prec)})});
    D2 ed = D2::constant(D1::constant(p.eta, 1), 1);
    D2 W = impl::W6v_t(wd, ed);
    MPScalar Wv = W.val.val, Wp = W.val.tan[0], Wpp = W.tan[0].tan[0];
    MPScalar r1 = abs(Wv * Wpp - Wp * Wp + one);
    // psi-ODE: d_u e^psi = e^(-2f) = 1/W^2, as a relative residual.
    D1 wd1(w, {MPScalar(1L, prec)});
    D1 ed1 = D1::constant(p.eta, 1), xd1 = D1::constant(xi.with_precision(prec), 1);
    D1 ep = impl::exp_psi6v_t(wd1, ed1, xd1);
    MPScalar rhs = one / (Wv * Wv);
    MPScalar r2 = abs(ep.tan[0] - rhs) / abs(rhs);
    return {r1.with_precision(precision), r2.with_precision(precision)};
  }
  if (params.model == Model::SixVPrime) {
    // W itself is singular on the removable lines u = 0 and v = -pi/2; nudge
    // off them. The sign of the Wronskian combination equals the sign of
    // sin(2u) sin(2v) (the absolute values in W flip it), so compare
    // magnitudes.
    MPScalar guard(1L, prec);
    mpfr_mul_2si(guard.raw(), guard.raw(), -40, MPFR_RNDN);
    MPScalar u = abs(p.u) < guard ? guard : p.u;
    MPScalar v = off_line_v(u, p.v, prec);
    D2 ud(D1(u, {MPScalar(0L, prec)}), {D1(MPScalar(1L, prec), {MPScalar(0L, prec)})});
    D2 vd(D1(v, {MPScalar(1L, prec)}), {D1(MPScalar(0L, prec), {MPScalar(0L, prec)})});
    D2 ed = D2::constant(D1::constant(p.eta, 1), 1);
    D2 W = impl::W6vp_t(ud, vd, ed);
    MPScalar Wv = W.val.val, Wu = W.tan[0].val, Wvv = W.val.tan[0], Wuv = W.tan[0].tan[0];
    MPScalar r1 = abs(abs(Wv * Wuv - Wu * Wvv) - one);
    // psi-ODE: |d_u e^psi| = 1/W^2 (relative); the sign again follows the
    // absolute-value branch of W.
    D1 ud1(u, {MPScalar(1L, prec)});
    D1 vd1 = D1::constant(v, 1), ed1 = D1::constant(p.eta, 1),
       xd1 = D1::constant(xi.with_precision(prec), 1);
    D1 ep = impl::exp_psi6vp_t(ud1, vd1, ed1, xd1);
    MPScalar rhs = one / (Wv * Wv);
    MPScalar r2 = abs(abs(ep.tan[0]) - rhs) / rhs;
    return {r1.with_precision(precision), r2.with_precision(precision)};
  }
  throw DomainError("liouville_residuals: defined for the 6V and 6V' models");
}

MPScalar xi_from_kappa(const ModelParams& params, const MPScalar& kappa, mpfr_prec_t precision) {
  mpfr_prec_t prec = precision + 32;
  MPScalar lo = branch_xi_min(params.with_precision(prec));
  MPScalar hi(0L, prec);
  MPScalar width = hi - lo;
  MPScalar pull(1L, prec);
  mpfr_mul_2si(pull.raw(), pull.raw(), -27, MPFR_RNDN);  // ~1e-8 of the range
  lo += width * pull;
  hi -= width * pull;
  // Empirical monotonicity check on a coarse grid.
  const int grid = 17;
  MPScalar prev = kappa_of_xi(params, lo, prec);
  int dir = 0;
  for (int i = 1; i < grid; ++i) {
    MPScalar x = lo + (hi - lo) * MPScalar(i, prec) / MPScalar(grid - 1, prec);
    MPScalar cur = kappa_of_xi(params, x, prec);
    int step = cur > prev ? 1 : -1;
    if (dir == 0) dir = step;
    else if (dir != step)
      throw DomainError("xi_from_kappa: kappa[xi] not monotone on this branch");
    prev = cur;
  }
  MPScalar a = lo, b = hi;
  MPScalar fa = kappa_of_xi(params, a, prec) - kappa.with_precision(prec);
  MPScalar fb = kappa_of_xi(params, b, prec) - kappa.with_precision(prec);
  if (fa.sign() == fb.sign()) throw DomainError("xi_from_kappa: kappa not bracketed");
  for (int it = 0; it < static_cast<int>(prec); ++it) {
    MPScalar mid = (a + b) / MPScalar(2L, prec);
    MPScalar fm = kappa_of_xi(params, mid, prec) - kappa.with_precision(prec);
    if (fm.sign() == fa.sign()) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return ((a + b) / MPScalar(2L, prec)).with_precision(precision);
}

}  // namespace arctic
