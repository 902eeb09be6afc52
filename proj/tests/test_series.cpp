#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "necklace/series.hpp"

using namespace necklace;

namespace {

// Brute force: expand (x^a + x^2a + ...)^b truncated at degree max by
// repeated polynomial multiplication.
std::vector<BigCount> expand(std::int64_t a, std::int64_t b, std::int64_t max) {
  std::vector<BigCount> acc(max + 1);
  acc[0] = 1;
  for (std::int64_t i = 0; i < b; ++i) {
    std::vector<BigCount> next(max + 1);
    for (std::int64_t p = 0; p <= max; ++p) {
      if (acc[p] == 0) continue;
      for (std::int64_t q = a; p + q <= max; q += a) next[p + q] += acc[p];
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

TEST_CASE("weight_coeff examples") {
  CHECK(weight_coeff(8, {1, 5}) == 35);
  CHECK(weight_coeff(6, {2, 2}) == 2);
  CHECK(weight_coeff(5, {2, 1}) == 0);
  CHECK(weight_coeff(0, {1, 0}) == 1);
  CHECK(weight_coeff(3, {1, 0}) == 0);
  CHECK(weight_coeff(0, {0, 0}) == 1);
}

TEST_CASE("weight_coeff errors") {
  CHECK_THROWS_AS(weight_coeff(4, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(weight_coeff(-1, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(weight_coeff(4, {1, -1}), std::invalid_argument);
}

TEST_CASE("weight_coeff matches explicit expansion") {
  constexpr std::int64_t kMax = 40;
  for (std::int64_t a = 1; a <= 8; ++a)
    for (std::int64_t b = 0; b <= 8; ++b) {
      const auto ref = expand(a, b, kMax);
      const auto dense = series_coefficients({a, b}, kMax);
      for (std::int64_t r = 0; r <= kMax; ++r) {
        REQUIRE(weight_coeff(r, {a, b}) == ref[r]);
        REQUIRE(dense[r] == ref[r]);
      }
    }
}

TEST_CASE("power of f is a shifted negative binomial series") {
  for (std::int64_t n = 1; n <= 12; ++n)
    for (std::int64_t k = 0; k <= 20; ++k)
      REQUIRE(weight_coeff(n + k, {1, n}) == binomial(n + k - 1, n - 1));
}

TEST_CASE("lowest term of f(x^a)^b is x^(ab)") {
  for (std::int64_t a = 1; a <= 6; ++a)
    for (std::int64_t b = 1; b <= 6; ++b) {
      for (std::int64_t r = 0; r < a * b; ++r) REQUIRE(weight_coeff(r, {a, b}) == 0);
      CHECK(weight_coeff(a * b, {a, b}) == 1);
    }
}

TEST_CASE("binary_weight_coeff examples") {
  CHECK(binary_weight_coeff(6, {1, 1}, {2, 2}) == 1);
  // The x^8 coefficient of (x + x^2 + ...)(x^2 + x^4 + ...)^2 is 3:
  // x^2*x^6 contributes C(2,1) = 2 and x^4*x^4 contributes 1.
  CHECK(binary_weight_coeff(8, {1, 1}, {2, 2}) == 3);
  CHECK(expand(1, 1, 8)[2] * expand(2, 2, 8)[6] + expand(1, 1, 8)[4] * expand(2, 2, 8)[4] == 3);
  CHECK(binary_weight_coeff(3, {2, 1}, {2, 1}) == 0);
  CHECK(binary_weight_coeff(0, {1, 0}, {3, 0}) == 1);
}

TEST_CASE("product_weight_coeff") {
  CHECK(product_weight_coeff(0, {}) == 1);
  CHECK(product_weight_coeff(3, {}) == 0);
  const std::vector<SeriesFactor> pair{{1, 1}, {2, 2}};
  CHECK(product_weight_coeff(8, pair) == 3);
  const std::vector<SeriesFactor> single{{1, 5}};
  CHECK(product_weight_coeff(14, single) == weight_coeff(14, {1, 5}));
}

TEST_CASE("two-factor product agrees with the binary convolution") {
  for (std::int64_t a1 = 1; a1 <= 6; ++a1)
    for (std::int64_t b1 = 0; b1 <= 6; ++b1)
      for (std::int64_t a2 = 1; a2 <= 6; ++a2)
        for (std::int64_t b2 = 0; b2 <= 6; ++b2) {
          const std::vector<SeriesFactor> fs{{a1, b1}, {a2, b2}};
          for (std::int64_t r = 0; r <= 40; ++r)
            REQUIRE(product_weight_coeff(r, fs) == binary_weight_coeff(r, fs[0], fs[1]));
        }
}

TEST_CASE("three-factor product agrees with expansion") {
  constexpr std::int64_t kMax = 30;
  const auto f1 = expand(1, 2, kMax), f2 = expand(2, 3, kMax), f3 = expand(3, 1, kMax);
  const std::vector<SeriesFactor> fs{{1, 2}, {2, 3}, {3, 1}};
  for (std::int64_t r = 0; r <= kMax; ++r) {
    BigCount ref = 0;
    for (std::int64_t i = 0; i <= r; ++i)
      for (std::int64_t j = 0; i + j <= r; ++j) ref += f1[i] * f2[j] * f3[r - i - j];
    REQUIRE(product_weight_coeff(r, fs) == ref);
  }
}
