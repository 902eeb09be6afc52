#pragma once

#include <cstdint>
#include <map>

#include "necklace/numtheory.hpp"

namespace necklace {

/// Probability distribution over (even) alternation counts.
struct DiscretePdf {
  enum class Provenance { theoretical, empirical };

  std::map<std::int64_t, double> entries;
  Provenance provenance = Provenance::theoretical;

  /// 0 for alternation counts outside the stored support.
  double at(std::int64_t alpha) const;
  double total() const;
};

/// num / den rounded to double with ~64 significant bits kept through the
/// division, so ratios of counts far beyond double range stay accurate.
double ratio_to_double(const BigCount& num, const BigCount& den);

}  // namespace necklace
