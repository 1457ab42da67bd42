#include <doctest.h>

#include <random>

#include "arctic/paths.hpp"

using namespace arctic;

namespace {

const mpfr_prec_t P = 320;

bool close_rel(const MPScalar& a, const MPScalar& b, double tol) {
  MPScalar scale = abs(a) > abs(b) ? abs(a) : abs(b);
  if (scale.is_zero()) return true;
  return (abs(a - b) / scale).to_double() < tol;
}

}  // namespace

TEST_CASE("6V single-path values at small k,l") {
  ModelParams p = named_point(NamedPoint::ASM, P);
  PathWeights pw = path_weights(p, P);
  CHECK(close_rel(path_partition_closed(p, 0, 0, P), pw.c0, 1e-60));
  CHECK(close_rel(path_partition_closed(p, 0, 3, P), pw.c0 * pow(pw.g1, 3), 1e-60));
  CHECK(close_rel(path_partition_dp(p, 0, 0, P), pw.c0, 1e-60));
  CHECK_THROWS_AS(path_partition_closed(p, -1, 0, P), DomainError);
  CHECK_THROWS_AS(path_partition_dp(p, 0, 500, P), CapacityError);
}

TEST_CASE("closed forms equal the DP oracle") {
  std::mt19937_64 rng(2024);
  for (Model m : {Model::SixV, Model::SixVPrime, Model::TwentyV}) {
    for (int trial = 0; trial < 2; ++trial) {
      ModelParams p = random_in_domain(m, rng, P);
      for (int k = 0; k <= 12; ++k)
        for (int l = 0; l <= 12; ++l) {
          MPScalar a = path_partition_closed(p, k, l, P);
          MPScalar b = path_partition_dp(p, k, l, P);
          CHECK(close_rel(a, b, 1e-30));
        }
      for (auto [k, l] : {std::pair{25, 30}, std::pair{30, 17}}) {
        CHECK(close_rel(path_partition_closed(p, k, l, P), path_partition_dp(p, k, l, P),
                        1e-30));
      }
    }
  }
}

TEST_CASE("6V' parity branches match the DP") {
  ModelParams p = named_point(NamedPoint::VSASM, P);
  for (auto [k, l] : {std::pair{2, 3}, std::pair{5, 4}, std::pair{7, 6}}) {
    CHECK(close_rel(path_partition_closed(p, k, l, P), path_partition_dp(p, k, l, P), 1e-30));
  }
}

TEST_CASE("uniform 20V path counts are integers") {
  ModelParams p = named_point(NamedPoint::Uniform20V, P);
  for (int k = 0; k <= 9; ++k)
    for (int l = 0; l <= 9; ++l) {
      MPScalar y = path_partition_closed(p, k, l, P);
      MPScalar half(0.5, P);
      MPScalar r = y - floor(y + half);
      CHECK(abs(r).to_double() < 1e-20);
      CHECK(close_rel(y, path_partition_dp(p, k, l, P), 1e-30));
    }
}

TEST_CASE("20V series satisfies the denominator recurrence on DP values") {
  std::mt19937_64 rng(7);
  ModelParams p = random_in_domain(Model::TwentyV, rng, P);
  PathWeights pw = path_weights(p, P);
  const auto& t = pw.t;
  const auto& al = pw.alpha;
  const int K = 8, L = 8;
  // c_{a,b} = [w^a z^b] of the generating function, so Y_{k,l} = c_{k+1,l};
  // the recurrence has sources at (a,b) = (1,0) and (2,1).
  auto c = [&](int a, int b) -> MPScalar {
    if (a <= 0 || b < 0) return MPScalar(0L, P);
    return path_partition_dp(p, a - 1, b, P);
  };
  for (int a = 1; a <= K; ++a)
    for (int b = 0; b <= L; ++b) {
      MPScalar rhs = al[0] * c(a - 1, b) + al[1] * c(a, b - 1) + al[2] * c(a - 1, b - 1) +
                     al[3] * c(a - 2, b - 1) + al[4] * c(a - 1, b - 2) + al[5] * c(a - 2, b - 2);
      if (a == 1 && b == 0) rhs += t[4] + t[2];
      if (a == 1 && b == 1) rhs += t[4] * t[5] - t[2] * t[6];
      if (a == 2 && b == 1) rhs += t[2] * t[5] - t[3] * t[4];
      CHECK(close_rel(c(a, b), rhs, 1e-30));
    }
}

TEST_CASE("entry weights scale the 20V path count linearly") {
  ModelParams p = named_point(NamedPoint::Uniform20V, P);
  MPScalar b1(2L, P), b0(0L, P), one(1L, P);
  MPScalar yh = path_partition_closed(p, 3, 4, P, &b1, &b0);
  MPScalar yd = path_partition_closed(p, 3, 4, P, &b0, &one);
  MPScalar y11 = path_partition_closed(p, 3, 4, P);
  CHECK(close_rel(yh / MPScalar(2L, P) + yd, y11, 1e-40));
}
