#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace necklace {

/// Exact non-negative count. Every counted quantity in the library (orbit
/// counts, series coefficients, binomials) is carried in this type, so no
/// result ever overflows.
using BigCount = boost::multiprecision::cpp_int;

/// Exact rational used for cycle-index coefficients.
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k). Total: returns 0 for k < 0, k > n or n < 0.
BigCount binomial(std::int64_t n, std::int64_t k);

/// Euler's totient. Throws std::invalid_argument for n <= 0.
std::int64_t totient(std::int64_t n);

/// Divisors of n in increasing order. Throws std::invalid_argument for n <= 0.
std::vector<std::int64_t> divisors(std::int64_t n);

}  // namespace necklace
