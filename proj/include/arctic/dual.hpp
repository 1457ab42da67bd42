#pragma once

#include <cstddef>
#include <vector>

#include "arctic/mp.hpp"

namespace arctic {

// Forward-mode dual number: primal value plus one tangent per independent
// differentiation direction. T is MPScalar or (for second derivatives)
// another Dual, so Dual<Dual<MPScalar>> carries second-order jets.
template <typename T>
struct Dual {
  T val;
  std::vector<T> tan;

  Dual() = default;
  explicit Dual(T v) : val(std::move(v)) {}
  Dual(T v, std::vector<T> t) : val(std::move(v)), tan(std::move(t)) {}

  // Seed a variable: tangent 1 in direction `dir` out of `ndirs`.
  static Dual variable(const T& v, std::size_t dir, std::size_t ndirs) {
    Dual d(v);
    d.tan.assign(ndirs, v - v);  // zeros of matching shape/precision
    d.tan[dir] = one_like(v);
    return d;
  }
  static Dual constant(const T& v, std::size_t ndirs) {
    Dual d(v);
    d.tan.assign(ndirs, v - v);
    return d;
  }

  static T one_like(const T& v);
};

template <>
inline MPScalar Dual<MPScalar>::one_like(const MPScalar& v) {
  return MPScalar(1L, v.precision());
}
template <typename T>
inline T Dual<T>::one_like(const T& v) {
  // T is itself a Dual: primal one, zero tangents of matching shape.
  T r = v - v;
  r.val = T::one_like(v.val);
  return r;
}

namespace detail {
template <typename T>
std::size_t ntan(const Dual<T>& a, const Dual<T>& b) {
  return a.tan.size() > b.tan.size() ? a.tan.size() : b.tan.size();
}
template <typename T>
T tan_at(const Dual<T>& a, std::size_t i) {
  return i < a.tan.size() ? a.tan[i] : a.val - a.val;
}
}  // namespace detail

template <typename T>
Dual<T> operator+(const Dual<T>& a, const Dual<T>& b) {
  Dual<T> r(a.val + b.val);
  std::size_t n = detail::ntan(a, b);
  r.tan.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    r.tan.push_back(detail::tan_at(a, i) + detail::tan_at(b, i));
  return r;
}

template <typename T>
Dual<T> operator-(const Dual<T>& a, const Dual<T>& b) {
  Dual<T> r(a.val - b.val);
  std::size_t n = detail::ntan(a, b);
  r.tan.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    r.tan.push_back(detail::tan_at(a, i) - detail::tan_at(b, i));
  return r;
}

template <typename T>
Dual<T> operator-(const Dual<T>& a) {
  Dual<T> r(-a.val);
  r.tan.reserve(a.tan.size());
  for (const auto& t : a.tan) r.tan.push_back(-t);
  return r;
}

template <typename T>
Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) {
  Dual<T> r(a.val * b.val);
  std::size_t n = detail::ntan(a, b);
  r.tan.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    r.tan.push_back(detail::tan_at(a, i) * b.val + a.val * detail::tan_at(b, i));
  return r;
}

template <typename T>
Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
  Dual<T> r(a.val / b.val);
  std::size_t n = detail::ntan(a, b);
  r.tan.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    r.tan.push_back((detail::tan_at(a, i) - r.val * detail::tan_at(b, i)) / b.val);
  return r;
}

template <typename T>
Dual<T> chain(const T& f, const T& dfdx, const Dual<T>& x) {
  Dual<T> r(f);
  r.tan.reserve(x.tan.size());
  for (const auto& t : x.tan) r.tan.push_back(dfdx * t);
  return r;
}

template <typename T>
Dual<T> sin(const Dual<T>& x) { return chain(sin(x.val), cos(x.val), x); }
template <typename T>
Dual<T> cos(const Dual<T>& x) { return chain(cos(x.val), -sin(x.val), x); }
template <typename T>
Dual<T> tan(const Dual<T>& x) {
  T t = tan(x.val);
  return chain(t, Dual<T>::one_like(x.val) + t * t, x);
}
template <typename T>
Dual<T> cot(const Dual<T>& x) {
  T c = cot(x.val);
  return chain(c, -(Dual<T>::one_like(x.val) + c * c), x);
}
template <typename T>
Dual<T> exp(const Dual<T>& x) {
  T e = exp(x.val);
  return chain(e, e, x);
}
template <typename T>
Dual<T> log(const Dual<T>& x) {
  return chain(log(x.val), Dual<T>::one_like(x.val) / x.val, x);
}
template <typename T>
Dual<T> sqrt(const Dual<T>& x) {
  T s = sqrt(x.val);
  T two = Dual<T>::one_like(x.val) + Dual<T>::one_like(x.val);
  return chain(s, Dual<T>::one_like(x.val) / (two * s), x);
}

// Sign of the primal value, recursing through nested duals.
inline int primal_sign(const MPScalar& x) { return x.sign(); }
template <typename T>
int primal_sign(const Dual<T>& x) { return primal_sign(x.val); }

template <typename T>
Dual<T> abs(const Dual<T>& x) {
  return primal_sign(x) < 0 ? -x : x;
}

template <typename T>
Dual<T> pow(const Dual<T>& x, long n) {
  Dual<T> r = Dual<T>::constant(Dual<T>::one_like(x.val), x.tan.size());
  Dual<T> base = x;
  long e = n < 0 ? -n : n;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  if (n < 0) r = Dual<T>::constant(Dual<T>::one_like(x.val), x.tan.size()) / r;
  return r;
}

// Magnitude of the underlying primal, for pivot selection.
inline MPScalar primal_abs(const MPScalar& x) { return abs(x); }
template <typename T>
MPScalar primal_abs(const Dual<T>& x) { return primal_abs(x.val); }

inline bool primal_zero(const MPScalar& x) { return x.is_zero(); }
template <typename T>
bool primal_zero(const Dual<T>& x) { return primal_zero(x.val); }

}  // namespace arctic
