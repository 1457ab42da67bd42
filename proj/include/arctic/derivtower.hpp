#pragma once

#include <gmpxx.h>

#include <vector>

#include "arctic/dual.hpp"
#include "arctic/errors.hpp"
#include "arctic/mp.hpp"

namespace arctic {

// Integer-coefficient polynomials P_0..P_k in c = cot(x) with
//   P_0(c) = c,   P_{j+1}(c) = -(1+c^2) P_j'(c),
// so that d^j/dx^j cot(x) = P_j(cot x).
class DerivTower {
 public:
  explicit DerivTower(int k_max);

  int order() const { return static_cast<int>(polys_.size()) - 1; }
  // Coefficients of P_j, lowest degree first; deg P_j = j+1.
  const std::vector<mpz_class>& poly(int j) const { return polys_.at(j); }

  template <typename T>
  T eval(int j, const T& c) const {
    const auto& p = polys_.at(j);
    T acc = make_const(p.back(), c);
    for (int i = static_cast<int>(p.size()) - 2; i >= 0; --i)
      acc = acc * c + make_const(p[i], c);
    return acc;
  }

  template <typename T>
  static T make_const(const mpz_class& z, const T& like);

 private:
  std::vector<std::vector<mpz_class>> polys_;
};

template <>
inline MPScalar DerivTower::make_const(const mpz_class& z, const MPScalar& like) {
  return MPScalar(z, like.precision());
}
template <typename T>
inline T DerivTower::make_const(const mpz_class& z, const T& like) {
  T r = like - like;
  r.val = make_const(z, like.val);
  return r;
}

DerivTower cot_derivative_polynomials(int k_max);

namespace detail {

inline void check_not_pole(const MPScalar& s, mpfr_prec_t prec) {
  MPScalar thr(1L, prec);
  mpfr_mul_2si(thr.raw(), thr.raw(), -(9 * static_cast<long>(prec)) / 10, MPFR_RNDN);
  if (abs(s) < thr) throw SingularityError("trigonometric kernel evaluated at a pole");
}
inline mpfr_prec_t prec_of(const MPScalar& x) { return x.precision(); }
template <typename T>
mpfr_prec_t prec_of(const Dual<T>& x) { return prec_of(x.val); }
inline MPScalar primal_of(const MPScalar& x) { return x; }
template <typename T>
MPScalar primal_of(const Dual<T>& x) { return primal_of(x.val); }

}  // namespace detail

// Entry k is d^k/dw^k [ 1/(sin(w+eta) sin(w-eta)) ], evaluated through the
// partial fractions m(w) = (cot(w-eta) - cot(w+eta))/sin(2 eta).
// At eta = 0 (classical limit) m(w) = 1/sin^2(w) = -d/dw cot(w), so entry k
// is -P_{k+1}(cot w).
template <typename T>
std::vector<T> m_derivatives_t(const T& w, const T& eta, int k_max, const DerivTower& tower) {
  mpfr_prec_t prec = detail::prec_of(w);
  std::vector<T> out;
  out.reserve(static_cast<size_t>(k_max) + 1);
  if (detail::primal_of(eta).is_zero()) {
    detail::check_not_pole(sin(detail::primal_of(w)), prec);
    T c = cot(w);
    for (int k = 0; k <= k_max; ++k) out.push_back(-tower.eval(k + 1, c));
    return out;
  }
  detail::check_not_pole(sin(detail::primal_of(w) - detail::primal_of(eta)), prec);
  detail::check_not_pole(sin(detail::primal_of(w) + detail::primal_of(eta)), prec);
  T cm = cot(w - eta);
  T cp = cot(w + eta);
  T s2e = sin(eta + eta);
  for (int k = 0; k <= k_max; ++k)
    out.push_back((tower.eval(k, cm) - tower.eval(k, cp)) / s2e);
  return out;
}

std::vector<MPScalar> m_derivatives(const MPScalar& w, const MPScalar& eta, int k_max,
                                    mpfr_prec_t precision);

// n x n matrix with entry (i,j) = (-1)^j d_u^i d_v^j m_U(u,v), where
// m_U(u,v) = m(u-v) - m(u+v); equals m^(i+j)(u-v) - (-1)^j m^(i+j)(u+v).
template <typename T>
std::vector<std::vector<T>> mU_derivative_matrix_t(const T& u, const T& v, const T& eta, int n,
                                                   const DerivTower& tower) {
  auto md_m = m_derivatives_t(u - v, eta, 2 * n - 2, tower);
  auto md_p = m_derivatives_t(u + v, eta, 2 * n - 2, tower);
  std::vector<std::vector<T>> M;
  M.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<T> row;
    row.reserve(n);
    for (int j = 0; j < n; ++j) {
      if (j % 2 == 0)
        row.push_back(md_m[i + j] - md_p[i + j]);
      else
        row.push_back(md_m[i + j] + md_p[i + j]);
    }
    M.push_back(std::move(row));
  }
  return M;
}

std::vector<std::vector<MPScalar>> mU_derivative_matrix(const MPScalar& u, const MPScalar& v,
                                                        const MPScalar& eta, int n,
                                                        mpfr_prec_t precision);

}  // namespace arctic
