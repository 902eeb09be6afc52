#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "necklace/numtheory.hpp"

namespace necklace {

/// Cycle-length subscript d -> exponent. Zero exponents are never stored.
using CycleExponents = std::map<std::int64_t, std::int64_t>;

struct CycleTerm {
  Rational coeff;
  CycleExponents x;  // white containers
  CycleExponents y;  // black containers

  friend bool operator==(const CycleTerm&, const CycleTerm&) = default;
};

/// Bipartite cycle index of a group acting on M white and M black containers,
/// kept in canonical form: equal monomials merged, terms sorted by monomial.
class BipartiteCycleIndex {
 public:
  BipartiteCycleIndex(std::int64_t containers_per_color, std::vector<CycleTerm> terms);

  std::int64_t containers_per_color() const { return containers_; }
  const std::vector<CycleTerm>& terms() const { return terms_; }

  /// e.g. "1/10*x1^5*y1^5 + 2/5*x5*y5 + 1/2*x1*x2^2*y1*y2^2"
  std::string to_string() const;

  friend bool operator==(const BipartiteCycleIndex&, const BipartiteCycleIndex&) = default;

 private:
  std::int64_t containers_;
  std::vector<CycleTerm> terms_;
};

/// Thrown when a Pólya substitution yields a non-integer orbit count.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// (1/M) sum_{d|M} phi(d) x_d^{M/d} y_d^{M/d}
BipartiteCycleIndex cyclic_bipartite_index(std::int64_t containers_per_color);

/// Rotations and reflections of a ring of 2M alternating containers.
BipartiteCycleIndex dihedral_bipartite_index(std::int64_t containers_per_color);

/// Substitutes f(x^d) for x_d and f(y^d) for y_d and returns the coefficient
/// of x^white y^black. Throws IntegralityError if the sum is not an integer.
BigCount count_orbits(const BipartiteCycleIndex& index, std::int64_t white, std::int64_t black);

}  // namespace necklace
