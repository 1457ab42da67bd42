#pragma once

// Closed-form large-N expressions shared by the asymptotics and curve
// modules, templated so they can be evaluated on dual numbers (derivatives
// in xi, u, v by forward propagation).

#include "arctic/dual.hpp"
#include "arctic/errors.hpp"

namespace arctic {
namespace impl {

inline mpfr_prec_t sprec(const MPScalar& x) { return x.precision(); }
template <typename T>
mpfr_prec_t sprec(const Dual<T>& x) { return sprec(x.val); }

template <typename T>
T one_of(const T& like);
template <>
inline MPScalar one_of(const MPScalar& like) { return MPScalar(1L, like.precision()); }
template <typename U>
Dual<U> one_of(const Dual<U>& like) {
  Dual<U> r = like - like;
  r.val = one_of(like.val);
  return r;
}

template <typename T>
T pi_of(const T& like) {
  if constexpr (std::is_same_v<T, MPScalar>) {
    return MPScalar::pi(like.precision());
  } else {
    T r = like - like;
    r.val = pi_of(like.val);
    return r;
  }
}

template <typename T>
T alpha_t(const T& eta) {
  T pi = pi_of(eta);
  return pi / (pi - eta - eta);
}

template <typename T>
T t6v_t(const T& w, const T& eta, const T& xi) {
  return sin(w - xi - eta) / sin(w - xi + eta);
}

template <typename T>
T t6vp_t(const T& u, const T& v, const T& eta, const T& xi) {
  return sin(u - v - xi - eta) * sin(u + v + xi + eta) /
         (sin(u - v - xi + eta) * sin(u + v + xi - eta));
}

// ------------------------------ 6V ------------------------------

template <typename T>
T kappa6v_t(const T& w, const T& eta, const T& xi) {
  T al = alpha_t(eta);
  T br = cot(w - xi - eta) + cot(xi) - al * cot(al * xi) - al * cot(al * (w - xi - eta));
  return br * sin(w - xi + eta) * sin(w - xi - eta) / sin(eta + eta);
}

template <typename T>
T A6v_t(const T& w, const T& eta, const T& xi) {
  return sin(w - xi + eta) * sin(w - xi - eta) / (sin(xi) * sin(xi - eta - eta));
}

template <typename T>
T lambda6v_t(const T& w, const T& eta, const T& xi) {
  return kappa6v_t(w, eta, xi) * sin(xi) * sin(xi - eta - eta) /
         (sin(w - xi + eta) * sin(w - xi - eta));
}

template <typename T>
T psi6v_t(const T& w, const T& eta, const T& xi) {
  T al = alpha_t(eta);
  T arg = sin(al * xi) * sin(al * (w - eta)) * sin(w - xi + eta) * sin(w - xi - eta) /
          (al * sin(al * (w - xi - eta)) * sin(xi) * sin(w + eta) * sin(w - eta));
  return -log(abs(arg));
}

template <typename T>
T phi6v_t(const T& w, const T& eta, const T& xi) {
  T al = alpha_t(eta);
  T arg = sin(al * xi) * sin(al * (w - eta)) * sin(w - xi - eta) /
          (al * sin(xi) * sin(w - eta) * sin(al * (w - xi - eta)));
  return -log(abs(arg));
}

template <typename T>
T f6v_t(const T& w, const T& eta, const T& rho) {
  T al = alpha_t(eta);
  return -log(al * rho * sin(w + eta) * sin(w - eta) / sin(al * (w - eta)));
}

template <typename T>
T W6v_t(const T& w, const T& eta) {
  T al = alpha_t(eta);
  return sin(al * (w - eta)) / al;
}

template <typename T>
T exp_psi6v_t(const T& w, const T& eta, const T& xi) {
  T al = alpha_t(eta);
  return al * sin(al * (w - xi - eta)) / (sin(al * xi) * sin(al * (w - eta)));
}

// ------------------------------ 6V' ------------------------------

// Guarded sin(2v)/sin(2 alpha (v+eta)): both factors vanish simultaneously on
// v = -pi/2 with ratio -> 1/alpha (the named points sit on that line).
template <typename T>
T vratio_t(const T& v, const T& eta) {
  T al = alpha_t(eta);
  T num = sin(v + v);
  T den = sin((al + al) * (v + eta));
  MPScalar guard(1L, sprec(v));
  mpfr_mul_2si(guard.raw(), guard.raw(), -60, MPFR_RNDN);
  if (primal_abs(num) < guard && primal_abs(den) < guard) return one_of(v) / al;
  return num / den;
}

// Guarded sin(2u)/sin(2 alpha u): vanishes pairwise at u = 0.
template <typename T>
T uratio_t(const T& u, const T& eta) {
  T al = alpha_t(eta);
  T num = sin(u + u);
  T den = sin((al + al) * u);
  MPScalar guard(1L, sprec(u));
  mpfr_mul_2si(guard.raw(), guard.raw(), -60, MPFR_RNDN);
  if (primal_abs(num) < guard && primal_abs(den) < guard) return one_of(u) / al;
  return num / den;
}

template <typename T>
T kappa6vp_t(const T& u, const T& v, const T& eta, const T& xi) {
  T al = alpha_t(eta);
  T br = cot(u - v - eta - xi) + cot(xi) + cot(xi + v + v) - cot(u + v + eta + xi) -
         al * (cot(al * (u - v - eta - xi)) + cot(al * xi) + cot(al * (xi + v + v + eta + eta)) -
               cot(al * (u + v + eta + xi)));
  T num = sin(u + v - eta + xi) * sin(u + v + eta + xi) * sin(u - v - eta - xi) *
          sin(u - v + eta - xi);
  T den = sin(eta + eta) * (cos(eta + eta) - cos(u + u) * cos(v + v + xi + xi));
  return br * num / den;
}

template <typename T>
T A6vp_t(const T& u, const T& v, const T& eta, const T& xi) {
  T two = one_of(u) + one_of(u);
  T num = sin(u - v - eta - xi) * sin(u - v + eta - xi) * sin(u + v - eta + xi) *
          sin(u + v + eta + xi);
  T den = sin(xi - eta - eta) * sin(xi) * (cos(eta + eta) - cos(u + u) * cos(v + v + xi + xi));
  return two * num / den;
}

template <typename T>
T lambda6vp_t(const T& u, const T& v, const T& eta, const T& xi) {
  T two = one_of(u) + one_of(u);
  return two * kappa6vp_t(u, v, eta, xi) / A6vp_t(u, v, eta, xi);
}

template <typename T>
T psi6vp_t(const T& u, const T& v, const T& eta, const T& xi) {
  T al = alpha_t(eta);
  T sA = sin(u - v + eta), sAb = sin(u - v - eta);
  T sB = sin(u + v + eta), sBb = sin(u + v - eta);
  T s1 = sin(u - v - xi - eta), s2 = sin(u + v + xi + eta);
  T s3 = sin(u - v - xi + eta), s4 = sin(u + v + xi - eta);
  T arg = vratio_t(v, eta) * sin(al * (u - v - eta)) * sin(al * (u + v + eta)) * sin(al * xi) *
          sin(al * (xi + v + v + eta + eta)) * s3 * s1 * s4 * s2 /
          (al * sin(al * (u - v - xi - eta)) * sin(al * (u + v + xi + eta)) * sin(xi) *
           sin(xi + v + v) * sA * sAb * sBb * sB);
  return -log(abs(arg));
}

template <typename T>
T phi6vp_arg_t(const T& u, const T& v, const T& eta, const T& xi) {
  T al = alpha_t(eta);
  T s1 = sin(u - v - xi - eta), s2 = sin(u + v + xi + eta);
  return vratio_t(v, eta) * s1 * s2 * sin(al * xi) * sin(al * (xi + v + v + eta + eta)) *
         sin(al * (u - v - eta)) * sin(al * (u + v + eta)) /
         (sin(v + v + xi) * sin(u - v - eta) * sin(u + v + eta) * al * sin(xi) *
          sin(al * (u - v - xi - eta)) * sin(al * (u + v + xi + eta)));
}

template <typename T>
T phi6vp_t(const T& u, const T& v, const T& eta, const T& xi) {
  return -log(abs(phi6vp_arg_t(u, v, eta, xi)));
}

template <typename T>
T f6vp_t(const T& u, const T& v, const T& eta, const T& rho_o, const T& rho_e) {
  T al = alpha_t(eta);
  T half = one_of(u) / (one_of(u) + one_of(u));
  T p4 = sin(u - v + eta) * sin(u - v - eta) * sin(u + v + eta) * sin(u + v - eta);
  return half * log(abs(uratio_t(u, eta) * vratio_t(v, eta))) +
         log(sin(al * (u - v - eta)) * sin(al * (-u - v - eta)) / (al * rho_e * rho_o * p4));
}

template <typename T>
T W6vp_t(const T& u, const T& v, const T& eta) {
  T al = alpha_t(eta);
  return sin(al * (u - v - eta)) * sin(al * (-u - v - eta)) /
         (al * sqrt(abs(sin((al + al) * u) * sin((al + al) * (v + eta)))));
}

template <typename T>
T exp_psi6vp_t(const T& u, const T& v, const T& eta, const T& xi) {
  T al = alpha_t(eta);
  return al * sin((al + al) * (v + eta)) * sin(al * (u - v - xi - eta)) *
         sin(al * (u + v + xi + eta)) /
         (sin(al * (u - v - eta)) * sin(al * (u + v + eta)) * sin(al * xi) *
          sin(al * (xi + v + v + eta + eta)));
}

// ------------------------------ 20V ------------------------------

template <typename T>
T kappa20v_t(const T& u, const T& v, const T& eta, const T& xi) {
  T s2 = sin(u + v + xi + eta), s4 = sin(u + v + xi - eta);
  T C = cos(eta + eta) - cos(u + u) * cos(v + v + xi + xi);
  T two = one_of(u) + one_of(u);
  return kappa6vp_t(u, v, eta, xi) / two + s2 * s4 / (two * C);
}

template <typename T>
T A20v_t(const T& u, const T& v, const T& eta, const T& xi) {
  T N1 = cos(eta + eta) - cos(u + v + eta) * cos(u + v - eta + xi + xi);
  T C = cos(eta + eta) - cos(u + u) * cos(v + v + xi + xi);
  return N1 / C * sin(u - v - eta - xi) * sin(u - v + eta - xi) /
         (sin(xi) * sin(xi - eta - eta));
}

template <typename T>
T lambda20v_t(const T& u, const T& v, const T& eta, const T& xi) {
  T two = one_of(u) + one_of(u);
  return two * kappa20v_t(u, v, eta, xi) / A20v_t(u, v, eta, xi);
}

template <typename T>
T phi20v_arg_t(const T& u, const T& v, const T& eta, const T& xi) {
  T s1 = sin(u - v - xi - eta), s3 = sin(u - v - xi + eta);
  return phi6vp_arg_t(u, v, eta, xi) * s1 * sin(u - v + eta) / (sin(u - v - eta) * s3);
}

template <typename T>
T phi20v_t(const T& u, const T& v, const T& eta, const T& xi) {
  return -log(abs(phi20v_arg_t(u, v, eta, xi)));
}

template <typename T>
T psi20v_t(const T& u, const T& v, const T& eta, const T& xi) {
  T r1 = sin(u - v - xi - eta) / sin(u - v - eta);
  T r2 = sin(eta - u - v - xi) / sin(eta - u - v);
  return psi6vp_t(u, v, eta, xi) - log(abs(r1 * r2));
}

template <typename T>
T f20v_t(const T& u, const T& v, const T& eta, const T& nu, const T& rho_o, const T& rho_e) {
  T half = one_of(u) / (one_of(u) + one_of(u));
  T s = nu * sin(u + u + eta + eta);
  return f6vp_t(u, v, eta, rho_o, rho_e) -
         half * log(s * s * s * sin(u - v - eta) * abs(sin(u + v - eta)));
}

// ------------------------------ DT ------------------------------

template <typename T>
T kappadt_t(const T& u, const T& v, const T& eta, const T& xi) {
  T two = one_of(u) + one_of(u);
  return two * kappa20v_t(u, v, eta, xi) - one_of(u);
}

template <typename T>
T Adt_t(const T& xi) {
  return -cot(xi + xi);
}

}  // namespace impl
}  // namespace arctic
