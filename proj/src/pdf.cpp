#include "necklace/pdf.hpp"

#include <cmath>
#include <stdexcept>

namespace necklace {

double DiscretePdf::at(std::int64_t alpha) const {
  auto it = entries.find(alpha);
  return it == entries.end() ? 0.0 : it->second;
}

double DiscretePdf::total() const {
  double sum = 0.0;
  for (const auto& [alpha, p] : entries) sum += p;
  return sum;
}

double ratio_to_double(const BigCount& num, const BigCount& den) {
  if (den <= 0) throw std::invalid_argument("ratio_to_double: denominator must be positive");
  if (num < 0) throw std::invalid_argument("ratio_to_double: numerator must be non-negative");
  if (num == 0) return 0.0;
  const long shift = 64 + static_cast<long>(msb(den)) - static_cast<long>(msb(num));
  BigCount scaled = shift >= 0 ? BigCount(num << shift) / den : num / BigCount(den << -shift);
  return std::ldexp(scaled.convert_to<double>(), static_cast<int>(-shift));
}

}  // namespace necklace
