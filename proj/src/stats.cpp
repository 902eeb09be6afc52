#include "necklace/stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace necklace {

namespace {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

constexpr double kRelativeTolerance = 1e-9;
constexpr double kMinSigma = 1e-6;
constexpr int kMaxIterations = 500;

// Gaussian elimination with partial pivoting; false if singular.
bool solve3(Mat3 a, Vec3 b, Vec3& x) {
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 3; ++row)
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    if (a[pivot][col] == 0.0) return false;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int row = col + 1; row < 3; ++row) {
      const double f = a[row][col] / a[col][col];
      if (f == 0.0) continue;
      for (int k = col; k < 3; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  for (int row = 2; row >= 0; --row) {
    double s = b[row];
    for (int k = row + 1; k < 3; ++k) s -= a[row][k] * x[k];
    x[row] = s / a[row][row];
  }
  return true;
}

struct Point {
  double alpha;
  double p;
};

double sum_squares(const std::vector<Point>& pts, const Vec3& q) {
  double cost = 0.0;
  for (const auto& pt : pts) {
    const double z = (pt.alpha - q[1]) / q[2];
    const double r = q[0] * std::exp(-0.5 * z * z) - pt.p;
    cost += r * r;
  }
  return cost;
}

SweepRow fit_row(const NecklaceSpec& spec) {
  SweepRow row{spec.length(), spec.n_at(), spec.n_gc(), false, std::nullopt, {}};
  try {
    row.fit = fit_gaussian(theoretical_pdf(spec));
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

DiscretePdf theoretical_pdf(const NecklaceSpec& spec) {
  const AlternationDistribution dist = alternation_distribution(spec);
  BigCount total = 0;
  for (const auto& [alpha, count] : dist) total += count;
  DiscretePdf pdf;
  pdf.provenance = DiscretePdf::Provenance::theoretical;
  for (const auto& [alpha, count] : dist) pdf.entries[alpha] = ratio_to_double(count, total);
  return pdf;
}

double GaussianFit::operator()(double alpha) const {
  const double z = (alpha - alpha0) / sigma;
  return amplitude * std::exp(-0.5 * z * z);
}

GaussianFit fit_gaussian(const DiscretePdf& pdf) {
  std::vector<Point> pts;
  for (const auto& [alpha, p] : pdf.entries)
    if (p > 0.0) pts.push_back({static_cast<double>(alpha), p});
  if (pts.size() < 3) throw FitError("support too small to fit");

  double weight = 0.0, mean = 0.0, peak = 0.0;
  for (const auto& pt : pts) {
    weight += pt.p;
    mean += pt.p * pt.alpha;
    peak = std::max(peak, pt.p);
  }
  mean /= weight;
  double var = 0.0;
  for (const auto& pt : pts) var += pt.p * (pt.alpha - mean) * (pt.alpha - mean);
  var /= weight;
  if (!(std::sqrt(var) >= kMinSigma)) throw FitError("degenerate width: sigma below 1e-6");

  Vec3 q{peak, mean, std::sqrt(var)};
  double cost = sum_squares(pts, q);
  double lambda = 1e-3;
  int iter = 0;
  for (; iter < kMaxIterations; ++iter) {
    Mat3 jtj{};
    Vec3 jtr{};
    for (const auto& pt : pts) {
      const double dz = pt.alpha - q[1];
      const double e = std::exp(-0.5 * dz * dz / (q[2] * q[2]));
      const double r = q[0] * e - pt.p;
      const Vec3 j{e, q[0] * e * dz / (q[2] * q[2]), q[0] * e * dz * dz / (q[2] * q[2] * q[2])};
      for (int a = 0; a < 3; ++a) {
        jtr[a] += j[a] * r;
        for (int b = 0; b < 3; ++b) jtj[a][b] += j[a] * j[b];
      }
    }

    bool converged = false;
    while (true) {
      Mat3 damped = jtj;
      for (int a = 0; a < 3; ++a) damped[a][a] *= 1.0 + lambda;
      Vec3 step{};
      if (!solve3(damped, Vec3{-jtr[0], -jtr[1], -jtr[2]}, step)) {
        converged = true;  // zero gradient and curvature: nothing left to move
        break;
      }
      Vec3 trial{q[0] + step[0], q[1] + step[1], q[2] + step[2]};
      bool small = true;
      for (int a = 0; a < 3; ++a)
        small = small && std::abs(step[a]) <= kRelativeTolerance * std::abs(trial[a]);
      const double trial_cost = sum_squares(pts, trial);
      if (trial_cost <= cost) {
        q = trial;
        cost = trial_cost;
        lambda = std::max(lambda / 10.0, 1e-12);
        converged = small;
        break;
      }
      if (small || lambda > 1e12) {
        converged = true;
        break;
      }
      lambda *= 10.0;
    }
    if (std::abs(q[2]) < kMinSigma) throw FitError("degenerate width: sigma below 1e-6");
    if (converged) break;
  }

  GaussianFit fit;
  fit.amplitude = q[0];
  fit.alpha0 = q[1];
  fit.sigma = std::abs(q[2]);
  fit.rmse = std::sqrt(cost / static_cast<double>(pts.size()));
  fit.iterations = iter + 1;
  return fit;
}

std::vector<SweepRow> sweep_fixed_at(std::int64_t n_at, std::span<const std::int64_t> gc_values) {
  if (gc_values.empty()) throw std::invalid_argument("sweep: no GC values given");
  std::vector<SweepRow> rows;
  for (auto n_gc : gc_values) {
    try {
      rows.push_back(fit_row(NecklaceSpec(n_at, n_gc)));
    } catch (const std::exception& e) {
      rows.push_back({n_at + n_gc, n_at, n_gc, false, std::nullopt, e.what()});
    }
  }
  return rows;
}

NecklaceSpec split_at_ratio(std::int64_t total, const ContentRatio& ratio, bool* rounded) {
  if (ratio.gc < 1 || ratio.at < 1) throw std::invalid_argument("ratio parts must be positive");
  if (total < 1) throw std::invalid_argument("ring length must be positive");
  const std::int64_t parts = ratio.gc + ratio.at;
  const std::int64_t n_at = (2 * total * ratio.at + parts) / (2 * parts);
  if (rounded) *rounded = (total * ratio.at) % parts != 0;
  return NecklaceSpec(n_at, total - n_at);
}

RatioSweep sweep_fixed_ratio(const ContentRatio& ratio, std::span<const std::int64_t> lengths) {
  if (lengths.empty()) throw std::invalid_argument("sweep: no ring lengths given");
  RatioSweep sweep{ratio, {}, std::nullopt};
  std::vector<double> xs, ys;
  for (auto n : lengths) {
    try {
      bool rounded = false;
      SweepRow row = fit_row(split_at_ratio(n, ratio, &rounded));
      row.rounded = rounded;
      if (row.fit) {
        xs.push_back(static_cast<double>(n));
        ys.push_back(row.fit->alpha0);
      }
      sweep.rows.push_back(std::move(row));
    } catch (const std::exception& e) {
      sweep.rows.push_back({n, 0, 0, false, std::nullopt, e.what()});
    }
  }
  if (xs.size() >= 2) sweep.slope = least_squares_slope(xs, ys);
  return sweep;
}

double least_squares_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("slope: need at least two paired points");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0.0) throw std::invalid_argument("slope: x values are all equal");
  return sxy / sxx;
}

}  // namespace necklace
