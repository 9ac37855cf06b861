#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "decomp/augmentation.hpp"
#include "decomp/diophantine.hpp"
#include "decomp/rng.hpp"
#include "decomp/types.hpp"

namespace decomp {

// Hierarchical prior: nu_k ~ Gamma(a, rate 1/beta_k) on {1..m},
// beta_k ~ InvGamma(c, gamma), gamma ~ Exp(1).
//
// All Gamma laws in this module are rate-parametrised (mean = shape/rate);
// the conjugate update for nu_k has rate 1/beta_k + T. Getting this wrong is
// the classic bug, hence the reminder.
struct PriorConfig {
  int m = 1;        // support cap of the Levy measure
  double a = 0.01;  // Gamma shape for nu_k
  double c = 2.0;   // InvGamma shape for beta_k
};

struct SamplerConfig {
  std::uint64_t iterations = 500000;
  std::uint64_t burn_in = 250000;  // must stay below iterations
  std::uint64_t thin = 1;
  std::uint64_t seed = 1;
  ProposalConfig proposal{};
  int sweeps = 1;   // MH moves per increment per Gibbs scan
  int threads = 1;  // parallel imputation cap
};

struct ChainState {
  LevyMeasure nu;
  std::vector<double> beta;
  double gamma = 1.0;
  ImputedCounts imputed;
  std::uint64_t iteration = 0;
};

// Retained draws, one row nu_1..nu_m per kept iteration.
struct PosteriorSamples {
  std::size_t m = 0;
  std::size_t rows = 0;
  std::vector<double> draws;  // rows x m, row-major

  PriorConfig prior{};
  SamplerConfig config{};
  std::string dataset_digest;
  double runtime_seconds = 0.0;

  std::span<const double> row(std::size_t r) const { return {draws.data() + r * m, m}; }
  double at(std::size_t r, std::size_t k) const { return draws[r * m + (k - 1)]; }  // 1-based k
};

// Default support-cap policy m = min(cap, Z_(n)), at least 1.
int default_support_cap(const IncrementData& data, int cap = 15);

// Feasible overdispersed start: plug-in floored at 0.1 where available,
// otherwise 0.5/m; beta_k = 1, gamma = 1, mu = first solution of each set.
ChainState init_chain_state(const IncrementData& data, const PriorConfig& prior,
                            SolutionCache& cache);

// Full conditionals (one draw each):
//   nu_k   ~ Gamma(a + mu_k, 1/beta_k + T)
//   beta_k ~ InvGamma(a + c, gamma + nu_k)
//   gamma  ~ Gamma(c m + 1, 1 + sum_k 1/beta_k)
void update_nu(ChainState& state, const IncrementData& data, const PriorConfig& prior, Rng& rng);
void update_beta(ChainState& state, const PriorConfig& prior, Rng& rng);
void update_gamma(ChainState& state, const PriorConfig& prior, Rng& rng);

// Data augmentation: alternates the imputation sweep with the three conjugate
// updates, recording nu after burn-in at the thinning stride. Deterministic
// given the seed.
PosteriorSamples run_chain(const IncrementData& data, const PriorConfig& prior,
                           const SamplerConfig& cfg, SolutionCache& cache);
PosteriorSamples run_chain(const IncrementData& data, const PriorConfig& prior,
                           const SamplerConfig& cfg);

}  // namespace decomp
