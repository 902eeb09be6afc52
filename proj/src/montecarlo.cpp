#include "necklace/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "necklace/stats.hpp"

namespace necklace {

std::uint64_t RandomStream::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("RandomStream::below: bound must be positive");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - kMax % bound;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return draw % bound;
}

std::uint64_t derive_sub_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void MCConfig::validate() const {
  if (runs < 1) throw std::invalid_argument("runs must be at least 1");
  if (sets < 1) throw std::invalid_argument("sets must be at least 1");
}

BeadString sample_chain(const NecklaceSpec& spec, RandomStream& rng) {
  std::string bits(static_cast<std::size_t>(spec.n_at()), '1');
  bits.append(static_cast<std::size_t>(spec.n_gc()), '0');
  for (std::size_t i = bits.size() - 1; i > 0; --i)
    std::swap(bits[i], bits[rng.below(i + 1)]);
  return BeadString(std::move(bits));
}

Histogram sample_histogram(const NecklaceSpec& spec, std::int64_t runs, RandomStream& rng) {
  Histogram hist;
  for (std::int64_t i = 0; i < runs; ++i) ++hist[count_alternations(sample_chain(spec, rng))];
  return hist;
}

DiscretePdf normalize(const Histogram& hist, std::int64_t runs) {
  DiscretePdf pdf;
  pdf.provenance = DiscretePdf::Provenance::empirical;
  for (const auto& [alpha, hits] : hist)
    pdf.entries[alpha] = static_cast<double>(hits) / static_cast<double>(runs);
  return pdf;
}

DiscretePdf empirical_pdf(const MCConfig& config) {
  config.validate();
  RandomStream rng(config.seed);
  return normalize(sample_histogram(config.spec, config.runs, rng), config.runs);
}

double total_abs_diff(const DiscretePdf& p, const DiscretePdf& q) {
  double sum = 0.0;
  for (const auto& [alpha, prob] : p.entries) sum += std::abs(prob - q.at(alpha));
  for (const auto& [alpha, prob] : q.entries)
    if (!p.entries.contains(alpha)) sum += std::abs(prob);
  return sum;
}

std::vector<SimulatedSet> simulate_sets(const MCConfig& config) {
  config.validate();
  const DiscretePdf theory = theoretical_pdf(config.spec);
  std::vector<SimulatedSet> out;
  out.reserve(static_cast<std::size_t>(config.sets));
  for (std::int64_t i = 0; i < config.sets; ++i) {
    const std::uint64_t sub_seed = derive_sub_seed(config.seed, static_cast<std::uint64_t>(i));
    RandomStream rng(sub_seed);
    Histogram hist = sample_histogram(config.spec, config.runs, rng);
    DiscretePdf pdf = normalize(hist, config.runs);
    const double d = total_abs_diff(pdf, theory);
    out.push_back({i, sub_seed, std::move(hist), std::move(pdf), d});
  }
  return out;
}

std::vector<ConvergenceRow> convergence_study(const NecklaceSpec& spec,
                                              std::span<const std::int64_t> run_counts,
                                              std::int64_t sets, std::uint64_t seed) {
  if (run_counts.empty()) throw std::invalid_argument("convergence_study: no run counts given");
  if (sets < 1) throw std::invalid_argument("sets must be at least 1");
  for (auto runs : run_counts)
    if (runs < 1) throw std::invalid_argument("runs must be at least 1");

  const DiscretePdf theory = theoretical_pdf(spec);
  std::vector<ConvergenceRow> rows;
  for (std::size_t j = 0; j < run_counts.size(); ++j) {
    ConvergenceRow row{run_counts[j], 0.0, 0.0, {}};
    std::vector<double> distances;
    for (std::int64_t i = 0; i < sets; ++i) {
      const auto counter = static_cast<std::uint64_t>(j) * static_cast<std::uint64_t>(sets) +
                           static_cast<std::uint64_t>(i);
      const std::uint64_t sub_seed = derive_sub_seed(seed, counter);
      RandomStream rng(sub_seed);
      distances.push_back(
          total_abs_diff(normalize(sample_histogram(spec, row.runs, rng), row.runs), theory));
      row.sub_seeds.push_back(sub_seed);
    }
    const double n = static_cast<double>(distances.size());
    row.mean_distance = std::accumulate(distances.begin(), distances.end(), 0.0) / n;
    if (distances.size() > 1) {
      double ss = 0.0;
      for (double d : distances) ss += (d - row.mean_distance) * (d - row.mean_distance);
      row.stddev_distance = std::sqrt(ss / (n - 1.0));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace necklace
