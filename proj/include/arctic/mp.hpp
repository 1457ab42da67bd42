#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "arctic/errors.hpp"

namespace arctic {

// Arbitrary-precision real. Every value carries its own precision (>= 128
// bits); arithmetic between two values is carried out at the larger of the
// two precisions. All roundings are to nearest.
class MPScalar {
 public:
  static constexpr mpfr_prec_t kMinPrecision = 128;

  MPScalar() { mpfr_init2(v_, kMinPrecision); mpfr_set_zero(v_, 1); }
  explicit MPScalar(mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_zero(v_, 1);
  }
  MPScalar(long x, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  MPScalar(int x, mpfr_prec_t prec) : MPScalar(static_cast<long>(x), prec) {}
  MPScalar(double x, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  MPScalar(const mpz_class& x, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
  }
  MPScalar(const std::string& s, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw DomainError("MPScalar: cannot parse '" + s + "'");
  }

  MPScalar(const MPScalar& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  MPScalar(MPScalar&& o) noexcept {
    mpfr_init2(v_, kMinPrecision);
    mpfr_swap(v_, o.v_);
  }
  MPScalar& operator=(const MPScalar& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  MPScalar& operator=(MPScalar&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~MPScalar() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  const mpfr_t& raw() const { return v_; }
  mpfr_t& raw() { return v_; }

  static MPScalar pi(mpfr_prec_t prec) {
    MPScalar r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Decimal string with the given number of significant digits.
  std::string to_string(int digits = 30) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  MPScalar with_precision(mpfr_prec_t prec) const {
    MPScalar r(clamp(prec));
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend MPScalar operator+(const MPScalar& a, const MPScalar& b) {
    MPScalar r(maxprec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend MPScalar operator-(const MPScalar& a, const MPScalar& b) {
    MPScalar r(maxprec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend MPScalar operator*(const MPScalar& a, const MPScalar& b) {
    MPScalar r(maxprec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend MPScalar operator/(const MPScalar& a, const MPScalar& b) {
    MPScalar r(maxprec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  MPScalar operator-() const {
    MPScalar r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  MPScalar& operator+=(const MPScalar& b) { *this = *this + b; return *this; }
  MPScalar& operator-=(const MPScalar& b) { *this = *this - b; return *this; }
  MPScalar& operator*=(const MPScalar& b) { *this = *this * b; return *this; }
  MPScalar& operator/=(const MPScalar& b) { *this = *this / b; return *this; }

  friend bool operator<(const MPScalar& a, const MPScalar& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const MPScalar& a, const MPScalar& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const MPScalar& a, const MPScalar& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const MPScalar& a, const MPScalar& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const MPScalar& a, const MPScalar& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const MPScalar& a, const MPScalar& b) { return !(a == b); }

 private:
  static mpfr_prec_t clamp(mpfr_prec_t p) { return p < kMinPrecision ? kMinPrecision : p; }
  static mpfr_prec_t maxprec(const MPScalar& a, const MPScalar& b) {
    return a.precision() > b.precision() ? a.precision() : b.precision();
  }
  mpfr_t v_;
};

#define ARCTIC_MP_UNARY(name, mpfr_fn)              \
  inline MPScalar name(const MPScalar& x) {         \
    MPScalar r(x.precision());                      \
    mpfr_fn(r.raw(), x.raw(), MPFR_RNDN);           \
    return r;                                       \
  }
ARCTIC_MP_UNARY(sin, mpfr_sin)
ARCTIC_MP_UNARY(cos, mpfr_cos)
ARCTIC_MP_UNARY(tan, mpfr_tan)
ARCTIC_MP_UNARY(cot, mpfr_cot)
ARCTIC_MP_UNARY(exp, mpfr_exp)
ARCTIC_MP_UNARY(sqrt, mpfr_sqrt)
ARCTIC_MP_UNARY(abs, mpfr_abs)
ARCTIC_MP_UNARY(atan, mpfr_atan)
#undef ARCTIC_MP_UNARY

inline MPScalar log(const MPScalar& x) {
  if (x.sign() <= 0) throw SingularityError("log of non-positive value");
  MPScalar r(x.precision());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

inline MPScalar pow(const MPScalar& x, long n) {
  MPScalar r(x.precision());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

inline MPScalar floor(const MPScalar& x) {
  MPScalar r(x.precision());
  mpfr_floor(r.raw(), x.raw());
  return r;
}

// Helpers used all over the numeric code.
inline MPScalar mp_from(long x, mpfr_prec_t prec) { return MPScalar(x, prec); }
inline mpz_class factorial_z(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace arctic
