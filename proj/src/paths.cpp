#include "arctic/paths.hpp"

#include "arctic/errors.hpp"

namespace arctic {

namespace {

constexpr int kPathCap = 200;

MPScalar binom(long n, long k, mpfr_prec_t prec) {
  if (k < 0 || n < 0 || k > n) return MPScalar(0L, prec);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return MPScalar(b, prec);
}

// Coefficients of (1 + g z)^m, truncated at degree len-1.
std::vector<MPScalar> poly_binom(const MPScalar& g, int m, int len, mpfr_prec_t prec) {
  std::vector<MPScalar> c(len, MPScalar(0L, prec));
  MPScalar acc(1L, prec);
  for (int i = 0; i <= m && i < len; ++i) {
    c[i] = binom(m, i, prec) * acc;
    acc = acc * g;
  }
  return c;
}

// Coefficients of (1 - g z)^(-m).
std::vector<MPScalar> series_inv_binom(const MPScalar& g, int m, int len, mpfr_prec_t prec) {
  std::vector<MPScalar> c(len, MPScalar(0L, prec));
  if (m == 0) {
    c[0] = MPScalar(1L, prec);
    return c;
  }
  MPScalar acc(1L, prec);
  for (int i = 0; i < len; ++i) {
    c[i] = binom(m - 1 + i, i, prec) * acc;
    acc = acc * g;
  }
  return c;
}

std::vector<MPScalar> series_mul(const std::vector<MPScalar>& a, const std::vector<MPScalar>& b,
                                 mpfr_prec_t prec) {
  std::vector<MPScalar> c(a.size(), MPScalar(0L, prec));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

void check_kl(int k, int l) {
  if (k < 0 || l < 0) throw DomainError("path partition: negative index");
  if (k > kPathCap || l > kPathCap) throw CapacityError("path partition: index beyond cap");
}

}  // namespace

PathWeights path_weights(const ModelParams& params, mpfr_prec_t precision) {
  check_domain(params);
  PathWeights pw;
  pw.model = params.model;
  MPScalar u = params.u.with_precision(precision), v = params.v.with_precision(precision),
           eta = params.eta.with_precision(precision);
  MPScalar s2e = sin(eta + eta);
  switch (params.model) {
    case Model::SixV: {
      MPScalar w = u - v;
      pw.b0 = sin(w - eta) / sin(w + eta);
      pw.c0 = s2e / sin(w + eta);
      pw.g1 = pw.b0;
      pw.g2 = (pw.c0 * pw.c0 - pw.b0 * pw.b0) / pw.b0;
      return pw;
    }
    case Model::SixVPrime: {
      pw.b0 = sin(u - v - eta) / sin(u - v + eta);
      pw.c0 = s2e / sin(u - v + eta);
      pw.b1 = sin(u + v + eta) / sin(u + v - eta);
      pw.c1 = s2e / sin(eta - u - v);
      pw.g1 = pw.b0;
      pw.g2 = pw.b1;
      pw.g3 = (pw.c0 * pw.c0 - pw.b0 * pw.b0) / pw.b0;
      pw.g4 = (pw.c1 * pw.c1 - pw.b1 * pw.b1) / pw.b1;
      return pw;
    }
    case Model::TwentyV:
    case Model::DT: {
      ModelParams p20 = params;
      if (params.model == Model::DT) p20 = named_point(NamedPoint::Uniform20V, precision);
      WeightTable wt = weight_table(p20.with_precision(precision));
      pw.t.clear();
      for (int i = 0; i < 7; ++i) pw.t.push_back(wt.omega[i] / wt.omega[0]);
      const auto& w = wt.omega;
      MPScalar w0sq = w[0] * w[0];
      pw.alpha.clear();
      pw.alpha.push_back(w[1] / w[0]);
      pw.alpha.push_back(w[6] / w[0]);
      pw.alpha.push_back((w[0] * w[3] + w[4] * w[4] - w[1] * w[6]) / w0sq);
      pw.alpha.push_back((w[2] * w[2] - w[1] * w[3]) / w0sq);
      pw.alpha.push_back((w[5] * w[5] - w[6] * w[3]) / w0sq);
      pw.alpha.push_back((MPScalar(2L, precision) * w[2] * w[4] * w[5] + w[1] * w[6] * w[3] -
                          w[3] * w[4] * w[4] - w[1] * w[5] * w[5] - w[6] * w[2] * w[2]) /
                         (w0sq * w[0]));
      return pw;
    }
  }
  throw DomainError("path_weights: unknown model");
}

MPScalar path_partition_closed(const ModelParams& params, int k, int l, mpfr_prec_t precision,
                               const MPScalar* beta1, const MPScalar* beta2) {
  check_kl(k, l);
  mpfr_prec_t prec = precision + 32;
  PathWeights pw = path_weights(params, prec);
  switch (params.model) {
    case Model::SixV: {
      MPScalar sum(0L, prec);
      for (int p2 = 0; p2 <= k && p2 <= l; ++p2) {
        sum += binom(static_cast<long>(l) - p2 + k, k, prec) * binom(k, p2, prec) *
               pow(pw.g1, static_cast<long>(k) + l - p2) * pow(pw.g2, p2);
      }
      return (pw.c0 * sum).with_precision(precision);
    }
    case Model::SixVPrime: {
      int eps = k % 2;
      int ne1 = (k + eps) / 2, ne2 = (k - eps) / 2;
      int de1 = 1 + (k - eps) / 2, de2 = (k + eps) / 2;
      int len = l + 1;
      auto ser = poly_binom(pw.g3, ne1, len, prec);
      ser = series_mul(ser, poly_binom(pw.g4, ne2, len, prec), prec);
      ser = series_mul(ser, series_inv_binom(pw.g1, de1, len, prec), prec);
      ser = series_mul(ser, series_inv_binom(pw.g2, de2, len, prec), prec);
      MPScalar ce = eps == 0 ? pw.c0 : pw.c1;
      return (ce * pow(pw.g1, ne1) * pow(pw.g2, ne2) * ser[l]).with_precision(precision);
    }
    case Model::TwentyV:
    case Model::DT: {
      MPScalar b1 = beta1 ? beta1->with_precision(prec) : MPScalar(1L, prec);
      MPScalar b2 = beta2 ? beta2->with_precision(prec) : MPScalar(1L, prec);
      const auto& t = pw.t;
      const auto& al = pw.alpha;
      // c_{a,b} = [w^a z^b] of N(z,w)/Q(z,w); Y_{k,l} = c_{k+1,l}.
      MPScalar s10 = b1 * t[4] + b2 * t[2];
      MPScalar s11 = b2 * (t[4] * t[5] - t[2] * t[6]);
      MPScalar s21 = b1 * (t[2] * t[5] - t[3] * t[4]);
      int A = k + 2, B = l + 1;
      std::vector<std::vector<MPScalar>> c(A, std::vector<MPScalar>(B, MPScalar(0L, prec)));
      auto at = [&](int a, int b) -> MPScalar {
        if (a < 0 || b < 0) return MPScalar(0L, prec);
        return c[a][b];
      };
      for (int a = 0; a < A; ++a)
        for (int b = 0; b < B; ++b) {
          MPScalar val = al[0] * at(a - 1, b) + al[1] * at(a, b - 1) + al[2] * at(a - 1, b - 1) +
                         al[3] * at(a - 2, b - 1) + al[4] * at(a - 1, b - 2) +
                         al[5] * at(a - 2, b - 2);
          if (a == 1 && b == 0) val += s10;
          if (a == 1 && b == 1) val += s11;
          if (a == 2 && b == 1) val += s21;
          c[a][b] = val;
        }
      return c[k + 1][l].with_precision(precision);
    }
  }
  throw DomainError("path_partition_closed: unknown model");
}

MPScalar path_partition_dp(const ModelParams& params, int k, int l, mpfr_prec_t precision,
                           const MPScalar* beta1, const MPScalar* beta2) {
  check_kl(k, l);
  mpfr_prec_t prec = precision + 32;
  PathWeights pw = path_weights(params, prec);
  MPScalar zero(0L, prec);

  if (params.model == Model::SixV || params.model == Model::SixVPrime) {
    // States: 0 = arrived horizontally, 1 = arrived vertically.
    std::vector<std::vector<std::vector<MPScalar>>> amp(
        static_cast<size_t>(k) + 1,
        std::vector<std::vector<MPScalar>>(static_cast<size_t>(l) + 1,
                                           std::vector<MPScalar>(2, zero)));
    amp[k][0][0] = MPScalar(1L, prec);
    MPScalar total = zero;
    for (int y = k; y >= 0; --y)
      for (int x = 0; x <= l; ++x)
        for (int s = 0; s < 2; ++s) {
          const MPScalar& a = amp[y][x][s];
          if (a.is_zero()) continue;
          MPScalar bb = pw.b0, cc = pw.c0;
          if (params.model == Model::SixVPrime && y % 2 == 1) {
            bb = pw.b1;
            cc = pw.c1;
          }
          if (x < l) amp[y][x + 1][0] += a * (s == 0 ? bb : cc);
          MPScalar wv = (s == 0 ? cc : bb);
          if (y > 0)
            amp[y - 1][x][1] += a * wv;
          else if (x == l)
            total += a * wv;  // final vertical step off the boundary
        }
    return total.with_precision(precision);
  }

  if (params.model == Model::TwentyV || params.model == Model::DT) {
    MPScalar b1 = beta1 ? beta1->with_precision(prec) : MPScalar(1L, prec);
    MPScalar b2 = beta2 ? beta2->with_precision(prec) : MPScalar(1L, prec);
    const auto& t = pw.t;
    // In-states: 0 horizontal, 1 diagonal, 2 vertical; weight(out, in).
    auto w = [&](int out, int in) -> const MPScalar& {
      static const int idx[3][3] = {{6, 5, 4}, {5, 3, 2}, {4, 2, 1}};
      return t[idx[out][in]];
    };
    std::vector<std::vector<std::vector<MPScalar>>> amp(
        static_cast<size_t>(k) + 1,
        std::vector<std::vector<MPScalar>>(static_cast<size_t>(l) + 1,
                                           std::vector<MPScalar>(3, zero)));
    amp[k][0][0] = b1;
    amp[k][0][1] += b2;
    MPScalar total = zero;
    for (int y = k; y >= 0; --y)
      for (int x = 0; x <= l; ++x)
        for (int s = 0; s < 3; ++s) {
          const MPScalar& a = amp[y][x][s];
          if (a.is_zero()) continue;
          if (x < l) amp[y][x + 1][0] += a * w(0, s);
          if (x < l && y > 0) amp[y - 1][x + 1][1] += a * w(1, s);
          if (y > 0)
            amp[y - 1][x][2] += a * w(2, s);
          else if (x == l)
            total += a * w(2, s);
        }
    return total.with_precision(precision);
  }
  throw DomainError("path_partition_dp: unknown model");
}

}  // namespace arctic
