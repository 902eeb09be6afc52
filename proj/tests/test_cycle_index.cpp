#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "necklace/cycle_index.hpp"
#include "necklace/oracle.hpp"

using namespace necklace;

namespace {

CycleTerm term(Rational c, CycleExponents x, CycleExponents y) { return {c, std::move(x), std::move(y)}; }

Rational coefficient_sum(const BipartiteCycleIndex& index) {
  Rational sum = 0;
  for (const auto& t : index.terms()) sum += t.coeff;
  return sum;
}

// Rotation-only classes of rings with `white` ones and 2M alternations.
std::int64_t rotation_classes(std::int64_t white, std::int64_t black, std::int64_t alternations) {
  const std::int64_t n = white + black;
  std::set<std::string> seen;
  for (std::uint64_t w = 0; w < (1ULL << n); ++w) {
    std::string s(n, '0');
    for (std::int64_t i = 0; i < n; ++i) s[i] = (w >> i) & 1 ? '1' : '0';
    if (std::count(s.begin(), s.end(), '1') != white) continue;
    if (count_alternations(BeadString(s)) != alternations) continue;
    std::string best = s, r = s;
    for (std::int64_t k = 0; k < n; ++k) {
      std::rotate(r.begin(), r.begin() + 1, r.end());
      best = std::min(best, r);
    }
    seen.insert(best);
  }
  return static_cast<std::int64_t>(seen.size());
}

}  // namespace

TEST_CASE("cyclic index examples") {
  CHECK(cyclic_bipartite_index(1) == BipartiteCycleIndex(1, {term(1, {{1, 1}}, {{1, 1}})}));
  CHECK(cyclic_bipartite_index(5) ==
        BipartiteCycleIndex(5, {term(Rational(1, 5), {{1, 5}}, {{1, 5}}), term(Rational(4, 5), {{5, 1}}, {{5, 1}})}));
  CHECK(cyclic_bipartite_index(4) ==
        BipartiteCycleIndex(4, {term(Rational(1, 4), {{1, 4}}, {{1, 4}}), term(Rational(1, 4), {{2, 2}}, {{2, 2}}),
                                term(Rational(1, 2), {{4, 1}}, {{4, 1}})}));
}

TEST_CASE("dihedral index examples") {
  CHECK(dihedral_bipartite_index(5) ==
        BipartiteCycleIndex(5, {term(Rational(1, 10), {{1, 5}}, {{1, 5}}), term(Rational(4, 10), {{5, 1}}, {{5, 1}}),
                                term(Rational(1, 2), {{1, 1}, {2, 2}}, {{1, 1}, {2, 2}})}));
  const auto m1 = dihedral_bipartite_index(1);
  REQUIRE(m1.terms().size() == 1);
  CHECK(m1.terms()[0] == term(1, {{1, 1}}, {{1, 1}}));
  CHECK(dihedral_bipartite_index(2) ==
        BipartiteCycleIndex(2, {term(Rational(1, 4), {{1, 2}}, {{1, 2}}), term(Rational(1, 4), {{2, 1}}, {{2, 1}}),
                                term(Rational(1, 4), {{1, 2}}, {{2, 1}}), term(Rational(1, 4), {{2, 1}}, {{1, 2}})}));
}

TEST_CASE("index rendering") {
  CHECK(dihedral_bipartite_index(5).to_string() == "1/2*x1*x2^2*y1*y2^2 + 1/10*x1^5*y1^5 + 2/5*x5*y5");
  CHECK(cyclic_bipartite_index(1).to_string() == "1*x1*y1");
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(cyclic_bipartite_index(0), std::invalid_argument);
  CHECK_THROWS_AS(dihedral_bipartite_index(-2), std::invalid_argument);
  CHECK_THROWS_AS(BipartiteCycleIndex(3, {term(1, {{1, 2}}, {{1, 3}})}), std::invalid_argument);
  CHECK_THROWS_AS(BipartiteCycleIndex(1, {term(1, {{0, 1}, {1, 1}}, {{1, 1}})}), std::invalid_argument);
}

TEST_CASE("coefficients sum to one and every term permutes M containers") {
  for (std::int64_t m = 1; m <= 200; ++m) {
    for (const auto& index : {dihedral_bipartite_index(m), cyclic_bipartite_index(m)}) {
      REQUIRE(coefficient_sum(index) == 1);
      for (const auto& t : index.terms()) {
        std::int64_t xs = 0, ys = 0;
        for (auto [d, e] : t.x) xs += d * e;
        for (auto [d, e] : t.y) ys += d * e;
        REQUIRE(xs == m);
        REQUIRE(ys == m);
        REQUIRE(t.coeff > 0);
      }
    }
  }
}

TEST_CASE("count_orbits examples") {
  CHECK(count_orbits(dihedral_bipartite_index(5), 8, 6) == 19);
  CHECK(count_orbits(dihedral_bipartite_index(1), 1, 1) == 1);
  CHECK(count_orbits(dihedral_bipartite_index(3), 2, 5) == 0);
}

TEST_CASE("count_orbits flags non-integer results") {
  const BipartiteCycleIndex broken(1, {term(Rational(1, 3), {{1, 1}}, {{1, 1}})});
  CHECK_THROWS_AS(count_orbits(broken, 1, 1), IntegralityError);
  CHECK_THROWS_AS(count_orbits(dihedral_bipartite_index(2), -1, 3), std::invalid_argument);
}

TEST_CASE("dihedral count is symmetric under colour exchange") {
  for (std::int64_t m = 1; m <= 15; ++m) {
    const auto index = dihedral_bipartite_index(m);
    for (std::int64_t a = 0; a <= 30; ++a)
      for (std::int64_t b = 0; a + b <= 30; ++b) REQUIRE(count_orbits(index, a, b) == count_orbits(index, b, a));
  }
}

TEST_CASE("no necklace has more containers than beads of a colour") {
  for (std::int64_t m = 1; m <= 8; ++m) {
    const auto index = dihedral_bipartite_index(m);
    for (std::int64_t a = 0; a <= 12; ++a)
      for (std::int64_t b = 0; b <= 12; ++b)
        if (a < m || b < m) REQUIRE(count_orbits(index, a, b) == 0);
  }
}

TEST_CASE("cyclic index counts rotation classes") {
  for (std::int64_t n = 2; n <= 12; ++n)
    for (std::int64_t white = 1; white < n; ++white)
      for (std::int64_t m = 1; m <= std::min(white, n - white); ++m)
        REQUIRE(count_orbits(cyclic_bipartite_index(m), white, n - white) ==
                rotation_classes(white, n - white, 2 * m));
}
