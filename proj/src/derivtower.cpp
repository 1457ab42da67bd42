#include "arctic/derivtower.hpp"

namespace arctic {

DerivTower::DerivTower(int k_max) {
  if (k_max < 0) throw DomainError("DerivTower: negative order");
  polys_.reserve(static_cast<size_t>(k_max) + 1);
  polys_.push_back({mpz_class(0), mpz_class(1)});  // P_0 = c
  for (int j = 0; j < k_max; ++j) {
    const auto& p = polys_.back();
    // dp = P_j'
    std::vector<mpz_class> dp(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) dp[i - 1] = mpz_class(static_cast<long>(i)) * p[i];
    // q = -(1+c^2) dp
    std::vector<mpz_class> q(dp.size() + 2, mpz_class(0));
    for (size_t i = 0; i < dp.size(); ++i) {
      q[i] -= dp[i];
      q[i + 2] -= dp[i];
    }
    polys_.push_back(std::move(q));
  }
}

DerivTower cot_derivative_polynomials(int k_max) { return DerivTower(k_max); }

std::vector<MPScalar> m_derivatives(const MPScalar& w, const MPScalar& eta, int k_max,
                                    mpfr_prec_t precision) {
  if (k_max < 0) throw DomainError("m_derivatives: negative order");
  DerivTower tower(eta.is_zero() ? k_max + 1 : k_max);
  return m_derivatives_t(w.with_precision(precision), eta.with_precision(precision), k_max, tower);
}

std::vector<std::vector<MPScalar>> mU_derivative_matrix(const MPScalar& u, const MPScalar& v,
                                                        const MPScalar& eta, int n,
                                                        mpfr_prec_t precision) {
  if (n < 1) throw DomainError("mU_derivative_matrix: n must be >= 1");
  DerivTower tower(eta.is_zero() ? 2 * n - 1 : 2 * n - 2);
  return mU_derivative_matrix_t(u.with_precision(precision), v.with_precision(precision),
                                eta.with_precision(precision), n, tower);
}

}  // namespace arctic
