#include <doctest.h>

#include "arctic/enumerate.hpp"

using namespace arctic;

TEST_CASE("6V counts at the ASM point: 1, 2, 7, 42, 429") {
  const long expect[] = {1, 2, 7, 42, 429};
  for (int n = 1; n <= 5; ++n) {
    RefinedCountsZ e = enumerate_uniform_counts(Model::SixV, n);
    CHECK(e.total == expect[n - 1]);
    mpz_class sum(0);
    for (const auto& z : e.by_exit) sum += z;
    CHECK(sum == e.total);
  }
  RefinedCountsZ e3 = enumerate_uniform_counts(Model::SixV, 3);
  CHECK(e3.by_exit == std::vector<mpz_class>{2, 3, 2});
  RefinedCountsZ e1 = enumerate_uniform_counts(Model::SixV, 1);
  CHECK(e1.total == 1);
  CHECK(e1.by_exit == std::vector<mpz_class>{1});
}

TEST_CASE("6V' counts at the VSASM point: 1, 3, 26") {
  const long expect[] = {1, 3, 26};
  for (int n = 1; n <= 3; ++n) {
    RefinedCountsZ e = enumerate_uniform_counts(Model::SixVPrime, n);
    CHECK(e.total == expect[n - 1]);
    mpz_class sum(0);
    for (const auto& z : e.by_exit) sum += z;
    CHECK(sum == e.total);
  }
}

TEST_CASE("20V counts at the uniform point: 1, 4, 60") {
  const long expect[] = {1, 4, 60};
  for (int n = 1; n <= 3; ++n) {
    RefinedCountsZ e = enumerate_uniform_counts(Model::TwentyV, n);
    CHECK(e.total == expect[n - 1]);
    CHECK(e.total == z20v_product_formula(n));
    mpz_class sum(0);
    for (const auto& z : e.by_exit) sum += z;
    CHECK(sum == e.total);
  }
  RefinedCountsZ e2 = enumerate_uniform_counts(Model::TwentyV, 2);
  CHECK(e2.by_exit == std::vector<mpz_class>{1, 2, 1});
  RefinedCountsZ e3 = enumerate_uniform_counts(Model::TwentyV, 3);
  CHECK(e3.by_exit == std::vector<mpz_class>{4, 15, 22, 15, 4});
}

TEST_CASE("Aztec triangle tilings: totals and refined counts") {
  const long expect[] = {1, 4, 60, 3328, 678912};
  for (int n = 1; n <= 5; ++n) {
    RefinedCountsZ dt = count_aztec_triangle(n);
    CHECK(dt.total == expect[n - 1]);
    CHECK(dt.total == z20v_product_formula(n));
    mpz_class sum(0);
    for (const auto& z : dt.by_exit) sum += z;
    CHECK(sum == dt.total);
  }
  for (int n = 6; n <= 10; ++n)
    CHECK(count_aztec_triangle(n).total == z20v_product_formula(n));
  RefinedCountsZ d3 = count_aztec_triangle(3);
  CHECK(d3.by_exit == std::vector<mpz_class>{37, 19, 4});
}

TEST_CASE("refined domino/20V identity holds exactly") {
  for (int n = 1; n <= 4; ++n) CHECK(refined_dt_identity(n) == 0);
}

TEST_CASE("domino totals equal 20V totals") {
  for (int n = 1; n <= 4; ++n)
    CHECK(count_aztec_triangle(n).total == enumerate_uniform_counts(Model::TwentyV, n).total);
}

TEST_CASE("capacity limits") {
  CHECK_THROWS_AS(enumerate_uniform_counts(Model::TwentyV, 7), CapacityError);
  CHECK_THROWS_AS(count_aztec_triangle(40), CapacityError);
}

TEST_CASE("bareiss determinant") {
  std::vector<std::vector<mpz_class>> m = {{2, 3, 1}, {4, 1, -3}, {2, 5, 2}};
  // det = 2(2+15) - 3(8+6) + 1(20-2) = 34 - 42 + 18 = 10
  CHECK(det_bareiss(m) == 10);
}
