#include "decomp/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "decomp/kernels.hpp"

namespace decomp {

namespace {

// type-7 quantile on a sorted sample
double percentile_sorted(const std::vector<double>& sorted, double pct) {
  const double h = (static_cast<double>(sorted.size()) - 1.0) * (pct / 100.0);
  const double fl = std::floor(h);
  const std::size_t lo = static_cast<std::size_t>(std::clamp(fl, 0.0, double(sorted.size() - 1)));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - fl) * (sorted[hi] - sorted[lo]);
}

}  // namespace

std::vector<CoordinateSummary> summarize_matrix(std::span<const double> draws, std::size_t rows,
                                                std::size_t cols, double lo_pct, double hi_pct) {
  if (rows == 0 || cols == 0) throw Error(Errc::invalid_argument, "summarize: empty samples");
  if (!(lo_pct >= 0.0) || !(hi_pct <= 100.0) || !(lo_pct <= hi_pct)) {
    throw Error(Errc::invalid_argument, "summarize: bad percentile levels");
  }
  std::vector<CoordinateSummary> out(cols);
  std::vector<double> column(rows);
  for (std::size_t k = 0; k < cols; ++k) {
    for (std::size_t r = 0; r < rows; ++r) column[r] = draws[r * cols + k];
    const double mean = kernels::sum(column.data(), rows) / static_cast<double>(rows);
    std::sort(column.begin(), column.end());
    out[k] = {mean, percentile_sorted(column, lo_pct), percentile_sorted(column, hi_pct)};
  }
  return out;
}

std::vector<CoordinateSummary> summarize(const PosteriorSamples& samples, double lo_pct,
                                         double hi_pct) {
  return summarize_matrix(samples.draws, samples.rows, samples.m, lo_pct, hi_pct);
}

double err_l1(std::span<const double> truth, std::span<const double> estimate,
              std::size_t k_cut) {
  double acc = 0.0;
  for (std::size_t k = 0; k < k_cut; ++k) {
    const double t = k < truth.size() ? truth[k] : 0.0;
    const double e = k < estimate.size() ? estimate[k] : 0.0;
    acc += std::fabs(e - t);
  }
  return acc;
}

double err_l1(const LevyMeasure& truth, std::span<const double> estimate, std::size_t k_cut) {
  return err_l1(std::span<const double>(truth.values()), estimate, k_cut);
}

std::vector<double> extract_trace(const PosteriorSamples& samples, std::size_t coordinate,
                                  std::size_t stride) {
  if (coordinate < 1 || coordinate > samples.m) {
    throw Error(Errc::invalid_argument, "extract_trace: coordinate out of range");
  }
  if (stride == 0) throw Error(Errc::invalid_argument, "extract_trace: stride must be >= 1");
  std::vector<double> out;
  out.reserve(samples.rows / stride + 1);
  for (std::size_t r = 0; r < samples.rows; r += stride) {
    out.push_back(samples.at(r, coordinate));
  }
  return out;
}

}  // namespace decomp
