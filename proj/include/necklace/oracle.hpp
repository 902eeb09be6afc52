#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "necklace/numtheory.hpp"

namespace necklace {

/// A ring of beads written as '1' (AT, white) and '0' (GC, black).
/// Position N-1 neighbours position 0.
class BeadString {
 public:
  explicit BeadString(std::string bits);

  const std::string& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  std::int64_t white_count() const;

  friend auto operator<=>(const BeadString&, const BeadString&) = default;

 private:
  std::string bits_;
};

/// Positions i where bead i differs from bead (i+1) mod N.
std::int64_t count_alternations(const BeadString& s);

/// Lexicographically least of the 2N rotations of s and of its reversal.
BeadString canonical_form(const BeadString& s);

inline constexpr std::int64_t kMaxOracleLength = 18;

/// (white count, alternations) -> number of distinct bracelets.
using OracleTable = std::map<std::pair<std::int64_t, std::int64_t>, BigCount>;

/// Exhaustive enumeration of all 2^N rings. Throws std::invalid_argument
/// outside 1 <= N <= kMaxOracleLength.
OracleTable enumerate_all(std::int64_t length);

}  // namespace necklace
