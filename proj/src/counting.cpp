#include "necklace/counting.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "necklace/cycle_index.hpp"

namespace necklace {

NecklaceSpec::NecklaceSpec(std::int64_t n_at, std::int64_t n_gc) : n_at_(n_at), n_gc_(n_gc) {
  if (n_at < 0 || n_gc < 0)
    throw std::invalid_argument("bead counts must be non-negative");
  if (n_at + n_gc == 0) throw std::invalid_argument("empty necklace (0 AT, 0 GC) is not allowed");
}

std::int64_t NecklaceSpec::max_alternations() const { return 2 * std::min(n_at_, n_gc_); }

BigCount necklace_count(std::int64_t containers, const NecklaceSpec& spec) {
  if (containers < 1)
    throw std::invalid_argument("necklace_count: container count must be positive");
  if (containers > std::min(spec.n_at(), spec.n_gc())) return 0;
  return count_orbits(dihedral_bipartite_index(containers), spec.n_at(), spec.n_gc());
}

BigCount count_for_alternations(std::int64_t alpha, const NecklaceSpec& spec) {
  if (alpha < 0) throw std::invalid_argument("alternation count must be non-negative");
  if (alpha % 2 != 0) throw std::invalid_argument("alternation count must be even");
  if (alpha == 0) return zero_alternation_count(spec);
  return necklace_count(alpha / 2, spec);
}

BigCount zero_alternation_count(const NecklaceSpec& spec) {
  return (spec.n_at() == 0) != (spec.n_gc() == 0) ? 1 : 0;
}

AlternationDistribution alternation_distribution(const NecklaceSpec& spec) {
  AlternationDistribution dist;
  dist[0] = zero_alternation_count(spec);
  for (std::int64_t m = 1; 2 * m <= spec.max_alternations(); ++m)
    dist[2 * m] = necklace_count(m, spec);
  return dist;
}

BigCount total_count(const NecklaceSpec& spec) {
  BigCount total = 0;
  for (const auto& [alpha, count] : alternation_distribution(spec)) total += count;
  return total;
}

BigCount bracelet_count_direct(const NecklaceSpec& spec) {
  const std::int64_t n = spec.length();
  const std::int64_t k = spec.n_at();

  // Rotation by n/d positions splits the ring into n/d cycles of length d.
  BigCount fixed = 0;
  for (std::int64_t d : divisors(std::gcd(n, k)))
    fixed += totient(d) * binomial(n / d, k / d);

  if (n % 2 == 1) {
    // n reflections, each fixing one bead and pairing the rest.
    fixed += n * binomial((n - 1) / 2, k / 2);
  } else {
    const std::int64_t pairs = (n - 2) / 2;
    // n/2 reflections through two opposite beads.
    BigCount through_beads = k % 2 == 0
                                 ? binomial(pairs, k / 2) + binomial(pairs, (k - 2) / 2)
                                 : 2 * binomial(pairs, (k - 1) / 2);
    // n/2 reflections through two opposite edges.
    BigCount through_edges = k % 2 == 0 ? binomial(n / 2, k / 2) : BigCount(0);
    fixed += (n / 2) * (through_beads + through_edges);
  }

  const std::int64_t group_order = 2 * n;
  if (fixed % group_order != 0)
    throw IntegralityError("bracelet_count_direct: Burnside sum not divisible by group order");
  return fixed / group_order;
}

}  // namespace necklace
