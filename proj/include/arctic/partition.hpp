#pragma once

#include <utility>

#include "arctic/derivtower.hpp"
#include "arctic/linalg.hpp"
#include "arctic/params.hpp"

namespace arctic {

namespace detail {

template <typename T>
T factorial_sq_prefactor(int n, const T& like) {
  mpz_class p(1);
  for (int i = 1; i < n; ++i) {
    mpz_class f = factorial_z(static_cast<unsigned long>(i));
    p *= f * f;
  }
  return DerivTower::make_const(p, like);
}

// D_n[w] = det_{0<=i,j<n} ( m^(i+j)(w) )  and its homogeneous-limit
// normalization Delta_n = D_n / prod (i!)^2.
template <typename T>
T det_D6v(const T& w, const T& eta, int n, const DerivTower& tower) {
  auto md = m_derivatives_t(w, eta, 2 * n - 2, tower);
  std::vector<std::vector<T>> M;
  M.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<T> row;
    row.reserve(n);
    for (int j = 0; j < n; ++j) row.push_back(md[i + j]);
    M.push_back(std::move(row));
  }
  return det_lu(std::move(M));
}

// Bordered variant: last column holds m^(i)(w - xi).
template <typename T>
T det_D6v_xi(const T& w, const T& xi, const T& eta, int n, const DerivTower& tower) {
  auto md = m_derivatives_t(w, eta, 2 * n - 2, tower);
  auto mx = m_derivatives_t(w - xi, eta, n - 1, tower);
  std::vector<std::vector<T>> M;
  M.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<T> row;
    row.reserve(n);
    for (int j = 0; j < n - 1; ++j) row.push_back(md[i + j]);
    row.push_back(mx[i]);
    M.push_back(std::move(row));
  }
  return det_lu(std::move(M));
}

template <typename T>
T det_D6vp(const T& u, const T& v, const T& eta, int n, const DerivTower& tower) {
  return det_lu(mU_derivative_matrix_t(u, v, eta, n, tower));
}

// Bordered variant: last column holds d_u^i m_U(u, v+xi).
template <typename T>
T det_D6vp_xi(const T& u, const T& v, const T& xi, const T& eta, int n, const DerivTower& tower) {
  auto md_m = m_derivatives_t(u - v, eta, 2 * n - 2, tower);
  auto md_p = m_derivatives_t(u + v, eta, 2 * n - 2, tower);
  auto mx_m = m_derivatives_t(u - v - xi, eta, n - 1, tower);
  auto mx_p = m_derivatives_t(u + v + xi, eta, n - 1, tower);
  std::vector<std::vector<T>> M;
  M.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<T> row;
    row.reserve(n);
    for (int j = 0; j < n - 1; ++j) {
      if (j % 2 == 0)
        row.push_back(md_m[i + j] - md_p[i + j]);
      else
        row.push_back(md_m[i + j] + md_p[i + j]);
    }
    row.push_back(mx_m[i] - mx_p[i]);
    M.push_back(std::move(row));
  }
  return det_lu(std::move(M));
}

template <typename T>
T delta6v_t(const T& w, const T& eta, int n, const DerivTower& tower) {
  if (n == 0) return DerivTower::make_const(mpz_class(1), w);
  return det_D6v(w, eta, n, tower) / factorial_sq_prefactor(n, w);
}

template <typename T>
T delta6vp_t(const T& u, const T& v, const T& eta, int n, const DerivTower& tower) {
  if (n == 0) return DerivTower::make_const(mpz_class(1), u);
  return det_D6vp(u, v, eta, n, tower) / factorial_sq_prefactor(n, u);
}

// Reduced one-point function H_n[.;xi] = (-1)^(n-1) (n-1)! D_n[.;xi]/D_n[.].
template <typename T>
T reduced_H6v_t(const T& w, const T& xi, const T& eta, int n, const DerivTower& tower) {
  T r = DerivTower::make_const(factorial_z(static_cast<unsigned long>(n - 1)), w) *
        det_D6v_xi(w, xi, eta, n, tower) / det_D6v(w, eta, n, tower);
  return (n % 2 == 0) ? -r : r;
}

template <typename T>
T reduced_H6vp_t(const T& u, const T& v, const T& xi, const T& eta, int n,
                 const DerivTower& tower) {
  T r = DerivTower::make_const(factorial_z(static_cast<unsigned long>(n - 1)), u) *
        det_D6vp_xi(u, v, xi, eta, n, tower) / det_D6vp(u, v, eta, n, tower);
  return (n % 2 == 0) ? -r : r;
}

}  // namespace detail

// Delta_n[u-v] (6V) or Delta_n[u,v] (6V'); Delta_0 = 1 by convention.
// eta = 0 is accepted for the 6V' classical-limit cross-check.
MPScalar delta(const ModelParams& params, int n, mpfr_prec_t precision);

enum class ClosedFormCase { Classical, FreeFermion };
// Classical: n! (sin2u sin2v / (sin^2(u-v) sin^2(u+v)))^(n(n+1)/2).
// FreeFermion: (4 sin2u sin2v)^(n(n+1)/2) (4 cos2u cos2v)^(n(n-1)/2)
//              / (cos(2(u-v)) cos(2(u+v)))^(n^2).
MPScalar delta_closed_form(ClosedFormCase kind, const MPScalar& u, const MPScalar& v, int n,
                           mpfr_prec_t precision);

// Homogeneous partition function Z_n. DT evaluates the 20V value at the
// uniform point.
MPScalar partition_fn(const ModelParams& params, int n, mpfr_prec_t precision);

// Semi-homogeneous Z_n[...; xi] with the last vertical spectral parameter
// relaxed to v + xi. xi = 0 short-circuits to partition_fn.
MPScalar refined_partition(const ModelParams& params, int n, const MPScalar& xi,
                           mpfr_prec_t precision);

// One-point function H_n[...; xi] = refined / homogeneous; 1 at xi = 0.
MPScalar one_point(const ModelParams& params, int n, const MPScalar& xi, mpfr_prec_t precision);

// Reduced one-point function H_n (no sin^(n-1) xi division, regular at xi=0
// only in ratio form; callers use it for recursions and asymptotics checks).
MPScalar reduced_one_point(const ModelParams& params, int n, const MPScalar& xi,
                           mpfr_prec_t precision);

// Residuals of the Delta recursion and of the reduced-one-point relation,
// derivatives taken by dual-number propagation through the determinants.
std::pair<MPScalar, MPScalar> recursion_residual(const ModelParams& params, int n,
                                                 const MPScalar& xi, mpfr_prec_t precision);

}  // namespace arctic
