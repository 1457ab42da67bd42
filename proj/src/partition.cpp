#include "arctic/partition.hpp"

#include <algorithm>

#include "arctic/errors.hpp"

namespace arctic {

namespace {

using D1 = Dual<MPScalar>;
using D2 = Dual<Dual<MPScalar>>;

// Bits needed to resolve a determinant that vanishes like x^order when
// |x| ~ 2^(exp).
long vanish_bits(const MPScalar& x, long order) {
  if (x.is_zero()) return order * 80;  // caller shifts first; defensive
  long e = mpfr_get_exp(x.raw());
  long b = 1 - e;
  return b > 0 ? order * b : 0;
}

struct ResolvedPoint {
  MPScalar u, v;
  mpfr_prec_t prec;
};

// The 6V' determinant pipeline degenerates on the lines sin(2u)=0 and
// sin(2v)=0 (the named points live there): D_n vanishes like
// sin(2u)^(n(n+1)/2) sin(2v)^(n(n-1)/2). Points on (or numerically at) those
// lines are nudged by 2^-80 and the working precision is raised by the
// number of bits lost to the cancellation.
ResolvedPoint resolve_6vp_point(const MPScalar& u, const MPScalar& v, int n,
                                mpfr_prec_t base_prec) {
  mpfr_prec_t guard = base_prec + 96;
  MPScalar uu = u.with_precision(guard), vv = v.with_precision(guard);
  MPScalar eps(1L, guard);
  mpfr_mul_2si(eps.raw(), eps.raw(), -80, MPFR_RNDN);
  MPScalar thresh(1L, guard);
  mpfr_mul_2si(thresh.raw(), thresh.raw(), -60, MPFR_RNDN);
  if (abs(sin(uu + uu)) < thresh) uu += eps;
  if (abs(sin(vv + vv)) < thresh) vv += eps;
  long order_u = static_cast<long>(n) * (n + 1) / 2;
  long order_v = static_cast<long>(n) * (n - 1) / 2;
  long extra = vanish_bits(sin(uu + uu), order_u) + vanish_bits(sin(vv + vv), order_v);
  ResolvedPoint r;
  r.prec = guard + static_cast<mpfr_prec_t>(extra);
  r.u = uu.with_precision(r.prec);
  r.v = vv.with_precision(r.prec);
  return r;
}

MPScalar z6v(const MPScalar& w, const MPScalar& eta, const MPScalar& rho, int n,
             mpfr_prec_t prec) {
  DerivTower tower(2 * n - 2);
  MPScalar d = detail::delta6v_t(w.with_precision(prec), eta.with_precision(prec), n, tower);
  MPScalar s2e = sin(eta + eta).with_precision(prec);
  return pow(s2e, n) * d * pow(rho.with_precision(prec) * sin(w + eta) * sin(w - eta),
                               static_cast<long>(n) * n);
}

MPScalar prod4(const MPScalar& u, const MPScalar& v, const MPScalar& eta) {
  return sin(u - v + eta) * sin(u - v - eta) * sin(u + v + eta) * sin(u + v - eta);
}

MPScalar z6vp(const MPScalar& u, const MPScalar& v, const MPScalar& eta, const MPScalar& rho_o,
              const MPScalar& rho_e, int n, mpfr_prec_t prec) {
  DerivTower tower(2 * n - 2);
  MPScalar uu = u.with_precision(prec), vv = v.with_precision(prec),
           ee = eta.with_precision(prec);
  MPScalar d = detail::delta6vp_t(uu, vv, ee, n, tower);
  long nn = static_cast<long>(n) * n;
  return pow(rho_e.with_precision(prec), nn - n) * pow(rho_o.with_precision(prec), nn) *
         pow(sin(ee + ee), n) * d * pow(prod4(uu, vv, ee), nn) /
         pow(sin(uu + uu) * sin(vv + vv), static_cast<long>(n) * (n + 1) / 2);
}

MPScalar z20v(const MPScalar& u, const MPScalar& v, const MPScalar& eta, const MPScalar& nu,
              int n, mpfr_prec_t prec) {
  MPScalar uu = u.with_precision(prec), vv = v.with_precision(prec),
           ee = eta.with_precision(prec);
  MPScalar one(1L, prec);
  MPScalar base = z6vp(uu, vv, ee, one, one, n, prec);
  long e1 = static_cast<long>(n) * (3 * n - 1) / 2;
  return pow(nu.with_precision(prec), e1) * base * pow(sin(uu + uu + ee + ee), e1) *
         pow(sin(uu - vv - ee), static_cast<long>(n) * (n - 1) / 2) *
         pow(sin(ee - uu - vv), static_cast<long>(n) * (n + 1) / 2);
}

MPScalar h6v(const MPScalar& w, const MPScalar& eta, const MPScalar& xi, int n,
             mpfr_prec_t prec) {
  DerivTower tower(2 * n - 2);
  MPScalar ww = w.with_precision(prec), ee = eta.with_precision(prec),
           xx = xi.with_precision(prec);
  MPScalar hred = detail::reduced_H6v_t(ww, xx, ee, n, tower);
  MPScalar ratio = sin(ww - xx + ee) * sin(ww - xx - ee) / (sin(ww + ee) * sin(ww - ee) * sin(xx));
  return sin(xx) * hred * pow(ratio, n);
}

MPScalar h6vp(const MPScalar& u, const MPScalar& v, const MPScalar& eta, const MPScalar& xi,
              int n, mpfr_prec_t prec) {
  DerivTower tower(2 * n - 2);
  MPScalar uu = u.with_precision(prec), vv = v.with_precision(prec),
           ee = eta.with_precision(prec), xx = xi.with_precision(prec);
  MPScalar hred = detail::reduced_H6vp_t(uu, vv, xx, ee, n, tower);
  MPScalar p4x = sin(uu - vv - xx + ee) * sin(uu - vv - xx - ee) * sin(uu + vv + xx + ee) *
                 sin(uu + vv + xx - ee);
  MPScalar ratio = sin(vv + vv) / (sin(xx) * sin(xx + vv + vv)) * p4x / prod4(uu, vv, ee);
  return hred * sin(xx) * sin(xx + vv + vv) / sin(xx + xx + vv + vv) * pow(ratio, n);
}

MPScalar h20v(const MPScalar& u, const MPScalar& v, const MPScalar& eta, const MPScalar& xi,
              int n, mpfr_prec_t prec) {
  MPScalar uu = u.with_precision(prec), vv = v.with_precision(prec),
           ee = eta.with_precision(prec), xx = xi.with_precision(prec);
  MPScalar r1 = sin(uu - vv - xx - ee) / sin(uu - vv - ee);
  MPScalar r2 = sin(ee - uu - vv - xx) / sin(ee - uu - vv);
  return pow(r1, n - 1) * pow(r2, n) * h6vp(uu, vv, ee, xx, n, prec);
}

ModelParams uniform_dt_params(mpfr_prec_t prec) {
  return named_point(NamedPoint::Uniform20V, prec);
}

}  // namespace

MPScalar delta(const ModelParams& params, int n, mpfr_prec_t precision) {
  if (n < 0) throw DomainError("delta: n must be >= 0");
  if (n == 0) return MPScalar(1L, precision);
  switch (params.model) {
    case Model::SixV: {
      mpfr_prec_t prec = precision + 64;
      DerivTower tower(2 * n - 2);
      return detail::delta6v_t((params.u - params.v).with_precision(prec),
                               params.eta.with_precision(prec), n, tower)
          .with_precision(precision);
    }
    case Model::SixVPrime: {
      // eta = 0 (classical limit) is accepted here; the tower switches to the
      // 1/sin^2 kernel internally.
      DerivTower tower(params.eta.is_zero() ? 2 * n - 1 : 2 * n - 2);
      ResolvedPoint rp = resolve_6vp_point(params.u, params.v, n, precision);
      return detail::delta6vp_t(rp.u, rp.v, params.eta.with_precision(rp.prec), n, tower)
          .with_precision(precision);
    }
    default:
      throw DomainError("delta: defined for the 6V and 6V' models");
  }
}

MPScalar delta_closed_form(ClosedFormCase kind, const MPScalar& u, const MPScalar& v, int n,
                           mpfr_prec_t precision) {
  if (n < 1) throw DomainError("delta_closed_form: n must be >= 1");
  mpfr_prec_t prec = precision + 64;
  MPScalar uu = u.with_precision(prec), vv = v.with_precision(prec);
  MPScalar s2u = sin(uu + uu), s2v = sin(vv + vv);
  long tri = static_cast<long>(n) * (n + 1) / 2;
  switch (kind) {
    case ClosedFormCase::Classical: {
      MPScalar smin = sin(uu - vv), spl = sin(uu + vv);
      if (smin.is_zero() || spl.is_zero())
        throw SingularityError("delta_closed_form: pole of the classical expression");
      MPScalar base = s2u * s2v / (smin * smin * spl * spl);
      return (MPScalar(factorial_z(static_cast<unsigned long>(n)), prec) * pow(base, tri))
          .with_precision(precision);
    }
    case ClosedFormCase::FreeFermion: {
      MPScalar c2m = cos(uu + uu - vv - vv), c2p = cos(uu + uu + vv + vv);
      if (c2m.is_zero() || c2p.is_zero())
        throw SingularityError("delta_closed_form: pole of the free-fermion expression");
      MPScalar four(4L, prec);
      // The (-4 cos2u cos2v) factor carries the (-1)^(n(n-1)/2) needed to
      // match the determinant normalization (in-domain cos2v < 0, so the
      // factor is positive there).
      MPScalar c2u = cos(uu + uu), c2v = cos(vv + vv);
      return (pow(four * s2u * s2v, tri) *
              pow(-four * c2u * c2v, static_cast<long>(n) * (n - 1) / 2) /
              pow(c2m * c2p, static_cast<long>(n) * n))
          .with_precision(precision);
    }
  }
  throw DomainError("delta_closed_form: unknown case");
}

MPScalar partition_fn(const ModelParams& params, int n, mpfr_prec_t precision) {
  if (n < 1) throw DomainError("partition_fn: n must be >= 1");
  check_domain(params);
  switch (params.model) {
    case Model::SixV:
      return z6v(params.u - params.v, params.eta, params.rho, n, precision + 64)
          .with_precision(precision);
    case Model::SixVPrime: {
      ResolvedPoint rp = resolve_6vp_point(params.u, params.v, n, precision);
      return z6vp(rp.u, rp.v, params.eta, params.rho_o, params.rho_e, n, rp.prec)
          .with_precision(precision);
    }
    case Model::TwentyV: {
      ResolvedPoint rp = resolve_6vp_point(params.u, params.v, n, precision);
      return z20v(rp.u, rp.v, params.eta, params.nu, n, rp.prec).with_precision(precision);
    }
    case Model::DT: {
      check_domain(params);  // pins the uniform point
      ModelParams up = uniform_dt_params(precision);
      ResolvedPoint rp = resolve_6vp_point(up.u, up.v, n, precision);
      return z20v(rp.u, rp.v, up.eta, up.nu, n, rp.prec).with_precision(precision);
    }
  }
  throw DomainError("unknown model");
}

MPScalar one_point(const ModelParams& params, int n, const MPScalar& xi, mpfr_prec_t precision) {
  if (n < 1) throw DomainError("one_point: n must be >= 1");
  check_domain(params);
  if (xi.is_zero()) return MPScalar(1L, precision);
  switch (params.model) {
    case Model::SixV:
      return h6v(params.u - params.v, params.eta, xi, n, precision + 64)
          .with_precision(precision);
    case Model::SixVPrime: {
      ResolvedPoint rp = resolve_6vp_point(params.u, params.v, n, precision);
      return h6vp(rp.u, rp.v, params.eta, xi, n, rp.prec).with_precision(precision);
    }
    case Model::TwentyV: {
      ResolvedPoint rp = resolve_6vp_point(params.u, params.v, n, precision);
      return h20v(rp.u, rp.v, params.eta, xi, n, rp.prec).with_precision(precision);
    }
    case Model::DT: {
      ModelParams up = uniform_dt_params(precision);
      ResolvedPoint rp = resolve_6vp_point(up.u, up.v, n, precision);
      return h20v(rp.u, rp.v, up.eta, xi, n, rp.prec).with_precision(precision);
    }
  }
  throw DomainError("unknown model");
}

MPScalar refined_partition(const ModelParams& params, int n, const MPScalar& xi,
                           mpfr_prec_t precision) {
  if (xi.is_zero()) return partition_fn(params, n, precision);
  mpfr_prec_t prec = precision + 64;
  return (partition_fn(params, n, prec) * one_point(params, n, xi, prec))
      .with_precision(precision);
}

MPScalar reduced_one_point(const ModelParams& params, int n, const MPScalar& xi,
                           mpfr_prec_t precision) {
  if (n < 1) throw DomainError("reduced_one_point: n must be >= 1");
  switch (params.model) {
    case Model::SixV: {
      mpfr_prec_t prec = precision + 64;
      DerivTower tower(2 * n - 2);
      return detail::reduced_H6v_t((params.u - params.v).with_precision(prec),
                                   xi.with_precision(prec), params.eta.with_precision(prec), n,
                                   tower)
          .with_precision(precision);
    }
    case Model::SixVPrime: {
      DerivTower tower(2 * n - 2);
      ResolvedPoint rp = resolve_6vp_point(params.u, params.v, n, precision);
      return detail::reduced_H6vp_t(rp.u, rp.v, xi.with_precision(rp.prec),
                                    params.eta.with_precision(rp.prec), n, tower)
          .with_precision(precision);
    }
    default:
      throw DomainError("reduced_one_point: defined for the 6V and 6V' models");
  }
}

std::pair<MPScalar, MPScalar> recursion_residual(const ModelParams& params, int n,
                                                 const MPScalar& xi, mpfr_prec_t precision) {
  if (n < 1) throw DomainError("recursion_residual: n must be >= 1");
  DerivTower tower(2 * n);
  MPScalar inv_n2 = MPScalar(1L, precision) / MPScalar(static_cast<long>(n) * n, precision);
  MPScalar inv_n = MPScalar(1L, precision) / MPScalar(static_cast<long>(n), precision);

  if (params.model == Model::SixV) {
    mpfr_prec_t prec = precision + 96;
    MPScalar w = (params.u - params.v).with_precision(prec);
    MPScalar ee = params.eta.with_precision(prec);
    MPScalar xx = xi.with_precision(prec);
    MPScalar dm = detail::delta6v_t(w, ee, n - 1, tower);
    MPScalar d0 = detail::delta6v_t(w, ee, n, tower);
    MPScalar dp = detail::delta6v_t(w, ee, n + 1, tower);
    MPScalar ratio = dp * dm / (d0 * d0);

    // d^2/du^2 Log Delta_n via nested duals (both levels seed u).
    D1 w_in(w, {MPScalar(1L, prec)});
    D2 w_dd(w_in, {D1(MPScalar(1L, prec), {MPScalar(0L, prec)})});
    D2 e_dd = D2::constant(D1::constant(ee, 1), 1);
    D2 logd = log(abs(detail::delta6v_t(w_dd, e_dd, n, tower)));
    MPScalar ddlog = logd.tan[0].tan[0];
    MPScalar r1 = abs(ratio - inv_n2.with_precision(prec) * ddlog);

    MPScalar h0 = detail::reduced_H6v_t(w, xx, ee, n, tower);
    MPScalar hp = detail::reduced_H6v_t(w, xx, ee, n + 1, tower);
    D1 w_d(w, {MPScalar(1L, prec)});
    D1 x_d = D1::constant(xx, 1);
    D1 e_d = D1::constant(ee, 1);
    D1 logh = log(abs(detail::reduced_H6v_t(w_d, x_d, e_d, n, tower)));
    MPScalar r2 = abs(hp / h0 * ratio + inv_n.with_precision(prec) * logh.tan[0]);
    return {r1.with_precision(precision), r2.with_precision(precision)};
  }

  if (params.model == Model::SixVPrime) {
    ResolvedPoint rp = resolve_6vp_point(params.u, params.v, n + 1, precision + 96);
    mpfr_prec_t prec = rp.prec;
    MPScalar uu = rp.u, vv = rp.v;
    MPScalar ee = params.eta.with_precision(prec);
    MPScalar xx = xi.with_precision(prec);
    MPScalar dm = detail::delta6vp_t(uu, vv, ee, n - 1, tower);
    MPScalar d0 = detail::delta6vp_t(uu, vv, ee, n, tower);
    MPScalar dp = detail::delta6vp_t(uu, vv, ee, n + 1, tower);
    MPScalar ratio = dp * dm / (d0 * d0);

    // d_u d_v Log Delta_n: outer direction u, inner direction v.
    D2 u_dd(D1(uu, {MPScalar(0L, prec)}), {D1(MPScalar(1L, prec), {MPScalar(0L, prec)})});
    D2 v_dd(D1(vv, {MPScalar(1L, prec)}), {D1(MPScalar(0L, prec), {MPScalar(0L, prec)})});
    D2 e_dd = D2::constant(D1::constant(ee, 1), 1);
    D2 logd = log(abs(detail::delta6vp_t(u_dd, v_dd, e_dd, n, tower)));
    MPScalar mixed = logd.tan[0].tan[0];
    MPScalar r1 = abs(ratio + inv_n2.with_precision(prec) * mixed);

    MPScalar h0 = detail::reduced_H6vp_t(uu, vv, xx, ee, n, tower);
    MPScalar hp = detail::reduced_H6vp_t(uu, vv, xx, ee, n + 1, tower);
    D1 u_d(uu, {MPScalar(1L, prec)});
    D1 v_d = D1::constant(vv, 1);
    D1 x_d = D1::constant(xx, 1);
    D1 e_d = D1::constant(ee, 1);
    D1 logh = log(abs(detail::reduced_H6vp_t(u_d, v_d, x_d, e_d, n, tower)));
    MPScalar r2 = abs(hp / h0 * ratio + inv_n.with_precision(prec) * logh.tan[0]);
    return {r1.with_precision(precision), r2.with_precision(precision)};
  }
  throw DomainError("recursion_residual: defined for the 6V and 6V' models");
}

}  // namespace arctic
