#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "decomp/types.hpp"

namespace decomp {

// Latent jump counts mu_ij ~ Poisson(Delta_i nu_j), returned as an n x m
// row-major matrix. The increment z_i = sum_j j*mu_ij is exact in law, so no
// path simulation is needed.
std::vector<std::int32_t> simulate_counts(const LevyMeasure& nu, std::span<const double> deltas,
                                          std::uint64_t seed);

IncrementData increments_from_counts(std::span<const std::int32_t> counts,
                                     std::span<const double> deltas, std::size_t m);

IncrementData simulate_increments(double lambda, const BaseDistribution& p,
                                  std::span<const double> deltas, std::uint64_t seed);

std::vector<double> uniform_grid(std::size_t n, double delta);
std::vector<double> random_uniform_grid(std::size_t n, double lo, double hi, std::uint64_t seed);

// Named experimental settings with their generating Levy measure.
// uniform146_{a,b,c}: lambda_0 = 2, jumps uniform on {1,4,6};
//   (a) n=100 Delta=1, (b) n=500 Delta=1, (c) n=500 Delta ~ Unif(0,2).
// geometric: nu_k = (1-alpha)^k / k (so lambda_0 = -log alpha), n on a unit grid.
struct Preset {
  std::string name;
  IncrementData data;
  LevyMeasure truth;
  double lambda0;
};

Preset make_preset(const std::string& name, std::uint64_t seed, double alpha = 1.0 / 3.0,
                   std::size_t n = 500);

}  // namespace decomp
