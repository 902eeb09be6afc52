#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "necklace/counting.hpp"
#include "necklace/oracle.hpp"
#include "necklace/pdf.hpp"

namespace necklace {

/// Seeded 64-bit random stream. Bounded draws use rejection sampling on the
/// raw engine output so sequences are identical across standard libraries.
class RandomStream {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64";

  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Seed of the index-th independent stream under a master seed:
/// splitmix64(master + (index + 1) * 0x9E3779B97F4A7C15).
std::uint64_t derive_sub_seed(std::uint64_t master, std::uint64_t index);

struct MCConfig {
  NecklaceSpec spec;
  std::int64_t runs = 20000;
  std::uint64_t seed = 0;
  std::int64_t sets = 5;

  /// Throws std::invalid_argument unless runs >= 1 and sets >= 1.
  void validate() const;
};

/// Uniformly random arrangement of the spec's beads (Fisher-Yates shuffle).
BeadString sample_chain(const NecklaceSpec& spec, RandomStream& rng);

/// Alternation count -> number of sampled chains.
using Histogram = std::map<std::int64_t, std::int64_t>;

Histogram sample_histogram(const NecklaceSpec& spec, std::int64_t runs, RandomStream& rng);
DiscretePdf normalize(const Histogram& hist, std::int64_t runs);

/// Histogram of config.runs chains drawn from a stream seeded with config.seed.
DiscretePdf empirical_pdf(const MCConfig& config);

/// L1 distance over the union of supports; lies in [0, 2].
double total_abs_diff(const DiscretePdf& p, const DiscretePdf& q);

struct SimulatedSet {
  std::int64_t index;
  std::uint64_t sub_seed;
  Histogram histogram;
  DiscretePdf pdf;
  double distance;  // total_abs_diff against the theoretical pdf
};

/// config.sets independent simulations; set i uses derive_sub_seed(seed, i).
std::vector<SimulatedSet> simulate_sets(const MCConfig& config);

struct ConvergenceRow {
  std::int64_t runs;
  double mean_distance;
  double stddev_distance;  // sample standard deviation, 0 for a single set
  std::vector<std::uint64_t> sub_seeds;
};

/// Row j, set i draws from derive_sub_seed(seed, j * sets + i).
std::vector<ConvergenceRow> convergence_study(const NecklaceSpec& spec,
                                              std::span<const std::int64_t> run_counts,
                                              std::int64_t sets, std::uint64_t seed);

}  // namespace necklace
