#include "necklace/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace necklace {

BeadString::BeadString(std::string bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("bead string must be non-empty");
  if (bits_.find_first_not_of("01") != std::string::npos)
    throw std::invalid_argument("bead string may contain only '0' and '1'");
}

std::int64_t BeadString::white_count() const {
  return static_cast<std::int64_t>(std::count(bits_.begin(), bits_.end(), '1'));
}

std::int64_t count_alternations(const BeadString& s) {
  const auto& b = s.bits();
  std::int64_t count = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] != b[(i + 1) % b.size()]) ++count;
  return count;
}

BeadString canonical_form(const BeadString& s) {
  std::string best = s.bits();
  std::string reversed(best.rbegin(), best.rend());
  for (const std::string& base : {s.bits(), reversed}) {
    std::string candidate = base;
    for (std::size_t k = 0; k < base.size(); ++k) {
      best = std::min(best, candidate);
      std::rotate(candidate.begin(), candidate.begin() + 1, candidate.end());
    }
  }
  return BeadString(std::move(best));
}

OracleTable enumerate_all(std::int64_t length) {
  if (length < 1 || length > kMaxOracleLength)
    throw std::invalid_argument("oracle: ring length must be in [1, " +
                                std::to_string(kMaxOracleLength) + "], got " +
                                std::to_string(length));
  std::set<BeadString> seen;
  const std::uint64_t total = std::uint64_t{1} << length;
  std::string bits(static_cast<std::size_t>(length), '0');
  for (std::uint64_t word = 0; word < total; ++word) {
    for (std::int64_t i = 0; i < length; ++i) bits[i] = (word >> i) & 1 ? '1' : '0';
    seen.insert(canonical_form(BeadString(bits)));
  }
  OracleTable table;
  for (const auto& bracelet : seen)
    table[{bracelet.white_count(), count_alternations(bracelet)}] += 1;
  return table;
}

}  // namespace necklace
