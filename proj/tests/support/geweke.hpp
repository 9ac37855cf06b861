#pragma once

// Joint-distribution test of the whole sampler stack (Geweke-style).
//
// Marginal-conditional side: iid draws of (gamma, beta, nu) from the prior.
// Successive-conditional side: a Markov chain that alternates
//   1. exact joint redraw of the latent counts and the data given nu
//      (Poisson multiplicities, the model's own generative law),
//   2. MH sweeps on the counts given the new data (the transition under test),
//   3. the three conjugate parameter updates.
// Both sides share the same stationary law for nu, so their moments must
// agree within Monte-Carlo error; a bug in any update shows up as drift.

#include <cstdint>
#include <span>
#include <vector>

#include "decomp/augmentation.hpp"
#include "decomp/gibbs.hpp"
#include "decomp/rng.hpp"
#include "decomp/simulate.hpp"
#include "decomp/types.hpp"

#include "oracles.hpp"

namespace geweke {

struct Result {
  std::vector<double> mean_marginal, se_marginal;
  std::vector<double> mean_successive, se_successive;

  bool pass(double n_se = 3.0) const {
    for (std::size_t k = 0; k < mean_marginal.size(); ++k) {
      const double gap = std::fabs(mean_marginal[k] - mean_successive[k]);
      const double se = std::sqrt(se_marginal[k] * se_marginal[k] +
                                  se_successive[k] * se_successive[k]);
      if (gap > n_se * se) return false;
    }
    return true;
  }
};

// Draws (gamma, beta, nu) from the hierarchical prior.
inline decomp::LevyMeasure prior_draw(const decomp::PriorConfig& prior, decomp::Rng& rng) {
  const double gamma = rng.gamma(1.0, 1.0);  // Exp(1)
  std::vector<double> nu(static_cast<std::size_t>(prior.m));
  for (double& v : nu) {
    const double beta = 1.0 / rng.gamma(prior.c, gamma);  // InvGamma(c, gamma)
    v = std::max(rng.gamma(prior.a, 1.0 / beta), 1e-300);
  }
  return decomp::LevyMeasure(std::move(nu));
}

inline Result run(const decomp::PriorConfig& prior, std::span<const double> deltas,
                  std::size_t iterations, std::uint64_t seed, int sweeps = 2,
                  std::int64_t z_sweep_cap = 30) {
  const std::size_t m = static_cast<std::size_t>(prior.m);
  const std::size_t n = deltas.size();

  // marginal-conditional: iid prior draws
  std::vector<std::vector<double>> marginal(m, std::vector<double>(iterations));
  for (std::size_t t = 0; t < iterations; ++t) {
    decomp::Rng rng = decomp::Rng::derive(seed, 0xabcd01, t);
    const auto nu = prior_draw(prior, rng);
    for (std::size_t k = 0; k < m; ++k) marginal[k][t] = nu.values()[k];
  }

  // successive-conditional chain
  std::vector<std::vector<double>> successive(m, std::vector<double>(iterations));
  decomp::SolutionCache cache;
  decomp::Rng init_rng = decomp::Rng::derive(seed, 0xabcd02, 0);
  decomp::ChainState state{prior_draw(prior, init_rng), std::vector<double>(m, 1.0), 1.0,
                           decomp::ImputedCounts(n, m), 0};
  const decomp::ProposalConfig proposal{};
  std::vector<decomp::IncrementRecord> records(n);

  for (std::size_t t = 0; t < iterations; ++t) {
    // 1. exact joint redraw of (counts, data) given nu
    const std::uint64_t sim_seed = decomp::Rng::derive(seed, 0xabcd07, t).next_u64();
    const auto counts = decomp::simulate_counts(state.nu, deltas, sim_seed);
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t z = 0;
      for (std::size_t j = 0; j < m; ++j) {
        z += static_cast<std::int64_t>(j + 1) * counts[i * m + j];
      }
      records[i] = {deltas[i], z};
    }
    const decomp::IncrementData data(records);
    for (std::size_t i = 0; i < n; ++i) {
      state.imputed.assign_raw(i, std::span(counts).subspan(i * m, m));
    }

    // 2. MH sweeps on the counts (skipped for deterministic or oversized sets)
    decomp::Rng mh_rng = decomp::Rng::derive(seed, 0xabcd03, t);
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t z = data.z(i);
      if (z < 2 || z > z_sweep_cap) continue;
      const auto& set = cache.get(prior.m, z);
      const std::size_t idx = set.index_of(state.imputed.counts(i));
      state.imputed.assign(i, static_cast<std::uint32_t>(idx), set.at(idx));
      for (int s = 0; s < sweeps; ++s) {
        decomp::mh_step(i, state.imputed, state.nu, data, cache, proposal, mh_rng);
      }
    }

    // 3. conjugate updates
    decomp::Rng rng_nu = decomp::Rng::derive(seed, 0xabcd04, t);
    decomp::update_nu(state, data, prior, rng_nu);
    decomp::Rng rng_beta = decomp::Rng::derive(seed, 0xabcd05, t);
    decomp::update_beta(state, prior, rng_beta);
    decomp::Rng rng_gamma = decomp::Rng::derive(seed, 0xabcd06, t);
    decomp::update_gamma(state, prior, rng_gamma);

    for (std::size_t k = 0; k < m; ++k) successive[k][t] = state.nu.values()[k];
  }

  Result out;
  for (std::size_t k = 0; k < m; ++k) {
    out.mean_marginal.push_back(oracles::mean(marginal[k]));
    out.se_marginal.push_back(oracles::se_iid(marginal[k]));
    out.mean_successive.push_back(oracles::mean(successive[k]));
    out.se_successive.push_back(oracles::se_batch_means(successive[k]));
  }
  return out;
}

}  // namespace geweke
