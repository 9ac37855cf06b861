#include "decomp/gibbs.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "decomp/plugin.hpp"

namespace decomp {

namespace {

constexpr double kNuFloor = 1e-300;

void validate(const IncrementData& data, const PriorConfig& prior, const SamplerConfig& cfg) {
  if (prior.m < 1) throw Error(Errc::invalid_argument, "prior: m must be >= 1");
  if (!(prior.a > 0.0) || !(prior.c > 0.0)) {
    throw Error(Errc::invalid_argument, "prior: a and c must be > 0");
  }
  if (cfg.iterations == 0 || cfg.burn_in >= cfg.iterations) {
    throw Error(Errc::invalid_argument, "sampler: burn_in must be < iterations");
  }
  if (cfg.thin == 0) throw Error(Errc::invalid_argument, "sampler: thin must be >= 1");
  if (!(cfg.proposal.pi_neighbor > 0.0) || cfg.proposal.pi_neighbor > 1.0) {
    throw Error(Errc::invalid_argument, "sampler: pi_neighbor must be in (0, 1]");
  }
  if (cfg.sweeps < 1) throw Error(Errc::invalid_argument, "sampler: sweeps must be >= 1");
  if (!(data.total_time() > 0.0)) {
    throw Error(Errc::invalid_argument, "sampler: total observation time must be > 0");
  }
}

}  // namespace

int default_support_cap(const IncrementData& data, int cap) {
  const std::int64_t z_max = data.max_z();
  const std::int64_t m = std::min<std::int64_t>(cap, z_max);
  return static_cast<int>(std::max<std::int64_t>(1, m));
}

ChainState init_chain_state(const IncrementData& data, const PriorConfig& prior,
                            SolutionCache& cache) {
  const std::size_t m = static_cast<std::size_t>(prior.m);
  std::vector<double> nu(m, 0.5 / static_cast<double>(m));
  if (data.equidistant()) {
    try {
      const PluginEstimate plug = plugin_estimate(data);
      for (std::size_t k = 0; k < m; ++k) {
        const double v = k < plug.nu_hat.size() ? plug.nu_hat[k] : 0.0;
        nu[k] = std::max(v, 0.1);
      }
    } catch (const Error&) {
      // plug-in unavailable (no zeros, degenerate); keep the flat start
    }
  }
  ChainState state{LevyMeasure(std::move(nu)), std::vector<double>(m, 1.0), 1.0,
                   ImputedCounts::initial(data, m, cache), 0};
  return state;
}

void update_nu(ChainState& state, const IncrementData& data, const PriorConfig& prior,
               Rng& rng) {
  const double t_total = data.total_time();
  const auto& totals = state.imputed.totals();
  std::vector<double> nu(state.nu.size());
  for (std::size_t k = 0; k < nu.size(); ++k) {
    const double shape = prior.a + static_cast<double>(totals[k]);
    const double rate = 1.0 / state.beta[k] + t_total;
    nu[k] = std::max(rng.gamma(shape, rate), kNuFloor);
  }
  state.nu = LevyMeasure(std::move(nu));
}

void update_beta(ChainState& state, const PriorConfig& prior, Rng& rng) {
  for (std::size_t k = 0; k < state.beta.size(); ++k) {
    state.beta[k] = 1.0 / rng.gamma(prior.a + prior.c, state.gamma + state.nu.values()[k]);
  }
}

void update_gamma(ChainState& state, const PriorConfig& prior, Rng& rng) {
  double inv_beta_sum = 0.0;
  for (double b : state.beta) inv_beta_sum += 1.0 / b;
  state.gamma = rng.gamma(prior.c * static_cast<double>(state.beta.size()) + 1.0,
                          1.0 + inv_beta_sum);
}

PosteriorSamples run_chain(const IncrementData& data, const PriorConfig& prior,
                           const SamplerConfig& cfg, SolutionCache& cache) {
  validate(data, prior, cfg);
  const auto start = std::chrono::steady_clock::now();
  const std::size_t m = static_cast<std::size_t>(prior.m);

  ChainState state = init_chain_state(data, prior, cache);
  const ImputeTables tables = make_impute_tables(data);

  PosteriorSamples out;
  out.m = m;
  out.prior = prior;
  out.config = cfg;
  out.dataset_digest = data.digest();
  const std::uint64_t retained = (cfg.iterations - cfg.burn_in) / cfg.thin;
  out.draws.reserve(retained * m);

  for (std::uint64_t t = 1; t <= cfg.iterations; ++t) {
    state.iteration = t;
    impute_all(state.imputed, state.nu, data, cache, cfg.proposal, tables, cfg.seed, t,
               cfg.sweeps, cfg.threads);
    Rng rng_nu = Rng::derive(cfg.seed, streams::phase(streams::nu, t), 0);
    update_nu(state, data, prior, rng_nu);
    Rng rng_beta = Rng::derive(cfg.seed, streams::phase(streams::beta, t), 0);
    update_beta(state, prior, rng_beta);
    Rng rng_gamma = Rng::derive(cfg.seed, streams::phase(streams::gamma, t), 0);
    update_gamma(state, prior, rng_gamma);

    if (t > cfg.burn_in && (t - cfg.burn_in) % cfg.thin == 0) {
      out.draws.insert(out.draws.end(), state.nu.values().begin(), state.nu.values().end());
    }
  }
  out.rows = out.draws.size() / m;
  out.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

PosteriorSamples run_chain(const IncrementData& data, const PriorConfig& prior,
                           const SamplerConfig& cfg) {
  SolutionCache cache;
  return run_chain(data, prior, cfg, cache);
}

}  // namespace decomp
