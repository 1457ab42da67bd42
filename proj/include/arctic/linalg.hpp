#pragma once

#include <vector>

#include "arctic/dual.hpp"
#include "arctic/errors.hpp"

namespace arctic {

// Determinant by LU factorization with partial pivoting (pivot on the
// magnitude of the primal value, so this also works on dual numbers).
template <typename T>
T det_lu(std::vector<std::vector<T>> m) {
  const size_t n = m.size();
  if (n == 0) throw DomainError("det_lu: empty matrix");
  int sign = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    MPScalar best = primal_abs(m[k][k]);
    for (size_t r = k + 1; r < n; ++r) {
      MPScalar cand = primal_abs(m[r][k]);
      if (cand > best) {
        best = cand;
        piv = r;
      }
    }
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    if (primal_zero(m[k][k])) return m[k][k] - m[k][k];  // exactly singular
    for (size_t r = k + 1; r < n; ++r) {
      T f = m[r][k] / m[k][k];
      for (size_t c = k + 1; c < n; ++c) m[r][c] = m[r][c] - f * m[k][c];
    }
  }
  T d = m[0][0];
  for (size_t k = 1; k < n; ++k) d = d * m[k][k];
  return sign < 0 ? -d : d;
}

}  // namespace arctic
