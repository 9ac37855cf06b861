#include "decomp/simulate.hpp"

#include <cmath>

#include "decomp/rng.hpp"

namespace decomp {

std::vector<std::int32_t> simulate_counts(const LevyMeasure& nu, std::span<const double> deltas,
                                          std::uint64_t seed) {
  const std::size_t m = nu.size();
  std::vector<std::int32_t> counts(deltas.size() * m, 0);
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!(deltas[i] > 0.0)) throw Error(Errc::invalid_argument, "simulate: delta must be > 0");
    Rng rng = Rng::derive(seed, streams::phase(streams::simulate, 0), i);
    for (std::size_t j = 0; j < m; ++j) {
      counts[i * m + j] = static_cast<std::int32_t>(rng.poisson(deltas[i] * nu.values()[j]));
    }
  }
  return counts;
}

IncrementData increments_from_counts(std::span<const std::int32_t> counts,
                                     std::span<const double> deltas, std::size_t m) {
  std::vector<IncrementRecord> records(deltas.size());
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    std::int64_t z = 0;
    for (std::size_t j = 0; j < m; ++j) {
      z += static_cast<std::int64_t>(j + 1) * counts[i * m + j];
    }
    records[i] = {deltas[i], z};
  }
  return IncrementData(std::move(records));
}

IncrementData simulate_increments(double lambda, const BaseDistribution& p,
                                  std::span<const double> deltas, std::uint64_t seed) {
  if (!(lambda > 0.0)) throw Error(Errc::invalid_argument, "simulate: lambda must be > 0");
  std::vector<double> nu(p.probs());
  for (double& v : nu) v *= lambda;
  const LevyMeasure levy(std::move(nu));
  const auto counts = simulate_counts(levy, deltas, seed);
  return increments_from_counts(counts, deltas, levy.size());
}

std::vector<double> uniform_grid(std::size_t n, double delta) {
  if (n < 1 || !(delta > 0.0)) throw Error(Errc::invalid_argument, "uniform_grid: bad arguments");
  return std::vector<double>(n, delta);
}

std::vector<double> random_uniform_grid(std::size_t n, double lo, double hi, std::uint64_t seed) {
  if (n < 1 || !(lo >= 0.0) || !(hi > lo)) {
    throw Error(Errc::invalid_argument, "random_uniform_grid: need n >= 1 and 0 <= lo < hi");
  }
  std::vector<double> deltas(n);
  Rng rng = Rng::derive(seed, streams::phase(streams::grid, 0), 0);
  for (double& d : deltas) {
    do {
      d = lo + (hi - lo) * rng.uniform();
    } while (d == 0.0);
  }
  return deltas;
}

Preset make_preset(const std::string& name, std::uint64_t seed, double alpha, std::size_t n) {
  if (name == "uniform146_a" || name == "uniform146_b" || name == "uniform146_c") {
    std::vector<double> nu(6, 0.0);
    nu[0] = nu[3] = nu[5] = 2.0 / 3.0;  // lambda_0 = 2, jumps uniform on {1,4,6}
    LevyMeasure truth(std::move(nu));
    std::vector<double> deltas;
    if (name == "uniform146_a") {
      deltas = uniform_grid(100, 1.0);
    } else if (name == "uniform146_b") {
      deltas = uniform_grid(500, 1.0);
    } else {
      deltas = random_uniform_grid(500, 0.0, 2.0, seed);
    }
    const auto counts = simulate_counts(truth, deltas, seed);
    return {name, increments_from_counts(counts, deltas, truth.size()), truth, 2.0};
  }
  if (name == "geometric") {
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
      throw Error(Errc::invalid_argument, "preset geometric: alpha must lie in (0,1)");
    }
    std::vector<double> nu;
    for (std::size_t k = 1;; ++k) {
      const double v = std::pow(1.0 - alpha, static_cast<double>(k)) / static_cast<double>(k);
      if (v < 1e-12) break;
      nu.push_back(v);
    }
    LevyMeasure truth(std::move(nu));
    const auto deltas = uniform_grid(n, 1.0);
    const auto counts = simulate_counts(truth, deltas, seed);
    return {name, increments_from_counts(counts, deltas, truth.size()), truth, -std::log(alpha)};
  }
  throw Error(Errc::invalid_argument, "unknown preset: " + name);
}

}  // namespace decomp
