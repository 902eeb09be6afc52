#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "necklace/numtheory.hpp"

namespace necklace {

/// The formal power series f(x^stride)^power with f(x) = x + x^2 + x^3 + ...
/// f is the weight generating function of a container holding one or more
/// beads, weighted by its bead count. power == 0 is the constant series 1.
struct SeriesFactor {
  std::int64_t stride = 1;
  std::int64_t power = 0;

  friend bool operator==(const SeriesFactor&, const SeriesFactor&) = default;
};

/// Throws std::invalid_argument unless power >= 0, stride >= 0 and
/// stride >= 1 whenever power >= 1.
void validate(const SeriesFactor& factor);

/// Coefficient of x^r in f(x^a)^b, via the closed form C(r/a - 1, b - 1).
BigCount weight_coeff(std::int64_t r, const SeriesFactor& factor);

/// Coefficient of x^r in f(x^a1)^b1 * f(x^a2)^b2, as the full convolution
/// sum over k in [0, r] of closed-form coefficients.
BigCount binary_weight_coeff(std::int64_t r, const SeriesFactor& first, const SeriesFactor& second);

/// Coefficient of x^r in the product of all factors. An empty product is 1.
BigCount product_weight_coeff(std::int64_t r, std::span<const SeriesFactor> factors);

/// Dense coefficients [x^0 .. x^max_degree] of a single factor.
std::vector<BigCount> series_coefficients(const SeriesFactor& factor, std::int64_t max_degree);

}  // namespace necklace
