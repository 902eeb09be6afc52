#include "necklace/cycle_index.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "necklace/series.hpp"

namespace necklace {

namespace {

void require_positive(std::int64_t m) {
  if (m <= 0)
    throw std::invalid_argument("cycle index: container count must be positive, got " +
                                std::to_string(m));
}

CycleExponents monomial(std::initializer_list<std::pair<std::int64_t, std::int64_t>> powers) {
  CycleExponents out;
  for (auto [d, e] : powers)
    if (e != 0) out[d] += e;
  return out;
}

std::vector<SeriesFactor> substitution(const CycleExponents& exps) {
  std::vector<SeriesFactor> factors;
  factors.reserve(exps.size());
  for (auto [d, e] : exps) factors.push_back({d, e});
  return factors;
}

void append_monomial(std::ostream& os, char var, const CycleExponents& exps) {
  for (auto [d, e] : exps) {
    os << '*' << var << d;
    if (e != 1) os << '^' << e;
  }
}

std::vector<CycleTerm> rotation_terms(std::int64_t m, const Rational& scale) {
  std::vector<CycleTerm> terms;
  for (std::int64_t d : divisors(m)) {
    Rational c = scale * Rational(totient(d), m);
    terms.push_back({c, monomial({{d, m / d}}), monomial({{d, m / d}})});
  }
  return terms;
}

}  // namespace

BipartiteCycleIndex::BipartiteCycleIndex(std::int64_t containers_per_color,
                                         std::vector<CycleTerm> terms)
    : containers_(containers_per_color) {
  require_positive(containers_);
  for (auto& t : terms) {
    for (auto* exps : {&t.x, &t.y}) {
      std::int64_t covered = 0;
      for (auto it = exps->begin(); it != exps->end();) {
        if (it->first < 1 || it->second < 0)
          throw std::invalid_argument("cycle index: invalid subscript or exponent");
        covered += it->first * it->second;
        it = it->second == 0 ? exps->erase(it) : std::next(it);
      }
      if (covered != containers_)
        throw std::invalid_argument("cycle index: term does not permute exactly M containers");
    }
  }
  std::sort(terms.begin(), terms.end(), [](const CycleTerm& a, const CycleTerm& b) {
    return std::tie(a.x, a.y) < std::tie(b.x, b.y);
  });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().x == t.x && terms_.back().y == t.y)
      terms_.back().coeff += t.coeff;
    else
      terms_.push_back(std::move(t));
  }
  std::erase_if(terms_, [](const CycleTerm& t) { return t.coeff == 0; });
}

std::string BipartiteCycleIndex::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << terms_[i].coeff;
    append_monomial(os, 'x', terms_[i].x);
    append_monomial(os, 'y', terms_[i].y);
  }
  return os.str();
}

BipartiteCycleIndex cyclic_bipartite_index(std::int64_t m) {
  require_positive(m);
  return {m, rotation_terms(m, Rational(1))};
}

BipartiteCycleIndex dihedral_bipartite_index(std::int64_t m) {
  require_positive(m);
  auto terms = rotation_terms(m, Rational(1, 2));
  if (m % 2 == 1) {
    // Each reflection fixes one container of each colour, pairs the rest.
    const auto pairs = (m - 1) / 2;
    terms.push_back({Rational(1, 2), monomial({{1, 1}, {2, pairs}}), monomial({{1, 1}, {2, pairs}})});
  } else {
    // Half the reflections fix two white containers, half fix two black.
    terms.push_back({Rational(1, 4), monomial({{1, 2}, {2, (m - 2) / 2}}), monomial({{2, m / 2}})});
    terms.push_back({Rational(1, 4), monomial({{2, m / 2}}), monomial({{1, 2}, {2, (m - 2) / 2}})});
  }
  return {m, std::move(terms)};
}

BigCount count_orbits(const BipartiteCycleIndex& index, std::int64_t white, std::int64_t black) {
  if (white < 0 || black < 0)
    throw std::invalid_argument("count_orbits: bead counts must be non-negative");
  Rational total = 0;
  for (const auto& term : index.terms()) {
    const auto xs = substitution(term.x);
    BigCount cx = product_weight_coeff(white, xs);
    if (cx.is_zero()) continue;
    const auto ys = substitution(term.y);
    BigCount cy = product_weight_coeff(black, ys);
    if (cy.is_zero()) continue;
    total += term.coeff * Rational(cx * cy);
  }
  if (denominator(total) != 1)
    throw IntegralityError("count_orbits: non-integer orbit count " + total.str() +
                           " (malformed cycle index?)");
  return numerator(total);
}

}  // namespace necklace
