#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "decomp/gibbs.hpp"
#include "decomp/types.hpp"

namespace decomp {

struct CoordinateSummary {
  double mean;
  double lower;
  double upper;
};

// Per-coordinate mean and percentile interval. Percentiles use linear
// interpolation between order statistics (type 7).
std::vector<CoordinateSummary> summarize_matrix(std::span<const double> draws, std::size_t rows,
                                                std::size_t cols, double lo_pct = 2.5,
                                                double hi_pct = 97.5);
std::vector<CoordinateSummary> summarize(const PosteriorSamples& samples, double lo_pct = 2.5,
                                         double hi_pct = 97.5);

// Truncated l1 error sum_{k=1..k_cut} |est_k - truth_k|; missing entries are 0.
double err_l1(std::span<const double> truth, std::span<const double> estimate,
              std::size_t k_cut = 50);
double err_l1(const LevyMeasure& truth, std::span<const double> estimate, std::size_t k_cut = 50);

// Column k (1-based) subsampled at the stride, first row always included.
std::vector<double> extract_trace(const PosteriorSamples& samples, std::size_t coordinate,
                                  std::size_t stride);

}  // namespace decomp
