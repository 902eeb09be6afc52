#pragma once

#include <cstdint>
#include <map>

#include "necklace/numtheory.hpp"

namespace necklace {

/// Bead content of a necklace: n_at white (AT) beads and n_gc black (GC)
/// beads. The empty necklace is rejected.
class NecklaceSpec {
 public:
  NecklaceSpec(std::int64_t n_at, std::int64_t n_gc);

  std::int64_t n_at() const { return n_at_; }
  std::int64_t n_gc() const { return n_gc_; }
  std::int64_t length() const { return n_at_ + n_gc_; }
  /// Largest attainable alternation count, 2*min(n_at, n_gc).
  std::int64_t max_alternations() const;

  friend bool operator==(const NecklaceSpec&, const NecklaceSpec&) = default;

 private:
  std::int64_t n_at_;
  std::int64_t n_gc_;
};

/// Alternation count -> number of distinct necklaces (up to rotation and
/// reflection) with that many alternations. Keys are 0, 2, ..., max.
using AlternationDistribution = std::map<std::int64_t, BigCount>;

/// Necklaces with exactly 2*containers alternations.
BigCount necklace_count(std::int64_t containers, const NecklaceSpec& spec);

/// Necklaces with the given (even) alternation count. Odd or negative alpha
/// throws std::invalid_argument.
BigCount count_for_alternations(std::int64_t alpha, const NecklaceSpec& spec);

/// 1 for a single-colour necklace, else 0.
BigCount zero_alternation_count(const NecklaceSpec& spec);

AlternationDistribution alternation_distribution(const NecklaceSpec& spec);

/// Sum of the alternation distribution.
BigCount total_count(const NecklaceSpec& spec);

/// Bracelets with the given content, by Burnside's lemma applied directly
/// to the dihedral group of the N-bead ring. Shares no code path with the
/// container construction behind total_count.
BigCount bracelet_count_direct(const NecklaceSpec& spec);

}  // namespace necklace
