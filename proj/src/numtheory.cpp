#include "necklace/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace necklace {

namespace {

constexpr std::int64_t kTotientScanLimit = 10000;

std::int64_t totient_by_factorization(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

BigCount binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount result = 1;
  // After step i the accumulator holds C(n - k + i, i), so each division is exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::int64_t totient(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("totient: n must be positive, got " + std::to_string(n));
  if (n > kTotientScanLimit) return totient_by_factorization(n);
  std::int64_t count = 0;
  for (std::int64_t d = 1; d <= n; ++d)
    if (std::gcd(d, n) == 1) ++count;
  return count;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("divisors: n must be positive, got " + std::to_string(n));
  std::vector<std::int64_t> low, high;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

}  // namespace necklace
