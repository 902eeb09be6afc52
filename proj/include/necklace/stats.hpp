#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "necklace/counting.hpp"
#include "necklace/pdf.hpp"

namespace necklace {

/// Class-uniform alternation pdf: each distinct necklace counts once.
/// Probabilities come from exact count ratios, rounded only at the end.
DiscretePdf theoretical_pdf(const NecklaceSpec& spec);

/// P_G(alpha) = amplitude * exp(-(alpha - alpha0)^2 / (2 sigma^2))
struct GaussianFit {
  double alpha0 = 0.0;
  double sigma = 0.0;
  double amplitude = 0.0;
  double rmse = 0.0;
  int iterations = 0;

  double operator()(double alpha) const;
};

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unweighted least-squares Gaussian over the nonzero entries of the pdf.
/// Starts from the weighted mean/standard deviation and the largest entry,
/// then Levenberg-Marquardt until every parameter moves by less than 1e-9
/// relative. Throws FitError for fewer than three nonzero points or if
/// sigma collapses below 1e-6.
GaussianFit fit_gaussian(const DiscretePdf& pdf);

struct SweepRow {
  std::int64_t length = 0;
  std::int64_t n_at = 0;
  std::int64_t n_gc = 0;
  bool rounded = false;  // content split is not exact at the requested ratio
  std::optional<GaussianFit> fit;
  std::string error;  // set when fit is empty
};

/// One row per n_gc value, in input order. Failures are recorded per row.
std::vector<SweepRow> sweep_fixed_at(std::int64_t n_at, std::span<const std::int64_t> gc_values);

struct ContentRatio {
  std::int64_t gc = 1;
  std::int64_t at = 1;
};

struct RatioSweep {
  ContentRatio ratio;
  std::vector<SweepRow> rows;
  /// Least-squares slope of alpha0 against N over successful rows.
  std::optional<double> slope;
};

/// Splits a ring of N beads at gc:at. When N * at is not divisible by
/// (gc + at), n_at is rounded to the nearest integer (halves up) and the
/// row is flagged as rounded.
NecklaceSpec split_at_ratio(std::int64_t total, const ContentRatio& ratio, bool* rounded = nullptr);

RatioSweep sweep_fixed_ratio(const ContentRatio& ratio, std::span<const std::int64_t> lengths);

/// Ordinary least-squares slope of ys against xs.
double least_squares_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace necklace
