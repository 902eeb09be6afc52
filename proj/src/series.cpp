#include "necklace/series.hpp"

#include <stdexcept>
#include <string>

namespace necklace {

namespace {

void require_degree(std::int64_t r) {
  if (r < 0) throw std::invalid_argument("series: negative degree " + std::to_string(r));
}

// Truncated product of a dense series with one more factor.
std::vector<BigCount> multiply_truncated(const std::vector<BigCount>& lhs,
                                         const std::vector<BigCount>& rhs) {
  std::vector<BigCount> out(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) {
      if (rhs[j].is_zero()) continue;
      out[i + j] += lhs[i] * rhs[j];
    }
  }
  return out;
}

}  // namespace

void validate(const SeriesFactor& factor) {
  if (factor.power < 0 || factor.stride < 0)
    throw std::invalid_argument("series factor: stride and power must be non-negative");
  if (factor.power >= 1 && factor.stride == 0)
    throw std::invalid_argument("series factor: stride 0 with positive power " +
                                std::to_string(factor.power));
}

BigCount weight_coeff(std::int64_t r, const SeriesFactor& factor) {
  validate(factor);
  require_degree(r);
  if (factor.power == 0) return r == 0 ? 1 : 0;
  if (r % factor.stride != 0 || r < factor.stride * factor.power) return 0;
  return binomial(r / factor.stride - 1, factor.power - 1);
}

BigCount binary_weight_coeff(std::int64_t r, const SeriesFactor& first, const SeriesFactor& second) {
  validate(first);
  validate(second);
  require_degree(r);
  BigCount total = 0;
  for (std::int64_t k = 0; k <= r; ++k) {
    BigCount left = weight_coeff(k, first);
    if (left.is_zero()) continue;
    total += left * weight_coeff(r - k, second);
  }
  return total;
}

std::vector<BigCount> series_coefficients(const SeriesFactor& factor, std::int64_t max_degree) {
  validate(factor);
  require_degree(max_degree);
  std::vector<BigCount> coeffs(static_cast<std::size_t>(max_degree) + 1);
  if (factor.power == 0) {
    coeffs[0] = 1;
    return coeffs;
  }
  // Nonzero terms sit at degree stride*m for m >= power, with value C(m-1, power-1).
  const std::int64_t c = factor.power - 1;
  BigCount value = 1;
  for (std::int64_t m = factor.power; m <= max_degree / factor.stride; ++m) {
    if (m > factor.power) {
      value *= m - 1;
      value /= m - 1 - c;
    }
    coeffs[static_cast<std::size_t>(m * factor.stride)] = value;
  }
  return coeffs;
}

BigCount product_weight_coeff(std::int64_t r, std::span<const SeriesFactor> factors) {
  require_degree(r);
  for (const auto& f : factors) validate(f);
  if (factors.empty()) return r == 0 ? 1 : 0;
  if (factors.size() == 1) return weight_coeff(r, factors.front());

  std::vector<BigCount> acc = series_coefficients(factors.front(), r);
  for (std::size_t i = 1; i + 1 < factors.size(); ++i)
    acc = multiply_truncated(acc, series_coefficients(factors[i], r));

  // Only the x^r coefficient of the final product is needed.
  const std::vector<BigCount> last = series_coefficients(factors.back(), r);
  BigCount total = 0;
  for (std::int64_t k = 0; k <= r; ++k) {
    const auto& a = acc[static_cast<std::size_t>(k)];
    const auto& b = last[static_cast<std::size_t>(r - k)];
    if (!a.is_zero() && !b.is_zero()) total += a * b;
  }
  return total;
}

}  // namespace necklace
