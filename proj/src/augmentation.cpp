#include "decomp/augmentation.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <thread>

namespace decomp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRateFloor = 1e-300;  // keeps log(delta*nu_k) finite

// Core move on prepared tables. log_rate[k-1] = log(Delta_i nu_k);
// lg[t] = lgamma(t+1) = log(t!). Returns the index of the new state.
std::size_t mh_move(const SolutionSet& sols, std::size_t cur, const double* log_rate,
                    const double* lg, double pi_neighbor, Rng& rng) {
  std::size_t cand;
  if (rng.uniform() < pi_neighbor) {
    const auto [a, b] = sols.neighbor_pair(cur);
    cand = rng.uniform_below(2) == 0 ? a : b;
  } else {
    cand = static_cast<std::size_t>(rng.uniform_below(sols.size()));
  }
  if (cand == cur) return cur;

  const auto mu = sols.at(cur);
  const auto mu_prop = sols.at(cand);
  double log_a = 0.0;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    const std::int32_t d = mu_prop[k] - mu[k];
    if (d != 0) log_a += d * log_rate[k] + lg[mu[k]] - lg[mu_prop[k]];
  }
  if (log_a >= 0.0 || std::log(rng.uniform_open()) <= log_a) return cand;
  return cur;
}

}  // namespace

ImputedCounts::ImputedCounts(std::size_t n, std::size_t m)
    : n_(n), m_(m), counts_(n * m, 0), sol_index_(n, 0), totals_(m, 0) {}

ImputedCounts ImputedCounts::initial(const IncrementData& data, std::size_t m,
                                     SolutionCache& cache) {
  ImputedCounts state(data.size(), m);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::int64_t z = data.z(i);
    if (z == 0) continue;
    if (z == 1) {
      state.counts_[i * m] = 1;
      state.totals_[0] += 1;
      continue;
    }
    const SolutionSet& sols = cache.get(static_cast<int>(m), z);
    state.assign(i, 0, sols.at(0));
  }
  return state;
}

std::span<const std::int32_t> ImputedCounts::counts(std::size_t i) const {
  return {counts_.data() + i * m_, m_};
}

void ImputedCounts::assign(std::size_t i, std::uint32_t idx, std::span<const std::int32_t> row) {
  assert(row.size() == m_);
  std::int32_t* dst = counts_.data() + i * m_;
  for (std::size_t k = 0; k < m_; ++k) {
    totals_[k] += row[k] - dst[k];
    dst[k] = row[k];
  }
  sol_index_[i] = idx;
}

void ImputedCounts::assign_raw(std::size_t i, std::span<const std::int32_t> row) {
  assert(row.size() == m_);
  std::int32_t* dst = counts_.data() + i * m_;
  for (std::size_t k = 0; k < m_; ++k) {
    totals_[k] += row[k] - dst[k];
    dst[k] = row[k];
  }
  sol_index_[i] = 0;
}

void ImputedCounts::assign_deferred(std::size_t i, std::uint32_t idx,
                                    std::span<const std::int32_t> row,
                                    std::span<std::int64_t> delta) {
  assert(row.size() == m_ && delta.size() == m_);
  std::int32_t* dst = counts_.data() + i * m_;
  for (std::size_t k = 0; k < m_; ++k) {
    delta[k] += row[k] - dst[k];
    dst[k] = row[k];
  }
  sol_index_[i] = idx;
}

void ImputedCounts::merge_totals(std::span<const std::int64_t> delta) {
  assert(delta.size() == m_);
  for (std::size_t k = 0; k < m_; ++k) totals_[k] += delta[k];
}

std::vector<std::int64_t> ImputedCounts::recompute_totals() const {
  std::vector<std::int64_t> out(m_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    const std::int32_t* row = counts_.data() + i * m_;
    for (std::size_t k = 0; k < m_; ++k) out[k] += row[k];
  }
  return out;
}

double log_acceptance(std::span<const std::int32_t> mu, std::span<const std::int32_t> mu_prop,
                      const LevyMeasure& nu, double delta) {
  if (mu.size() != mu_prop.size() || mu.size() != nu.size()) {
    throw Error(Errc::invalid_argument, "log_acceptance: mismatched lengths");
  }
  if (!(delta > 0.0)) throw Error(Errc::invalid_argument, "log_acceptance: delta must be > 0");
  double log_a = 0.0;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    const double rate = nu.values()[k];
    if (rate == 0.0) {
      if (mu[k] > 0) {
        throw Error(Errc::invalid_state,
                    "log_acceptance: current state uses a zero-rate component");
      }
      if (mu_prop[k] > mu[k]) return -kInf;
      continue;
    }
    const std::int32_t d = mu_prop[k] - mu[k];
    if (d != 0) {
      log_a += d * std::log(delta * std::max(rate, kRateFloor));
      log_a += std::lgamma(static_cast<double>(mu[k]) + 1.0) -
               std::lgamma(static_cast<double>(mu_prop[k]) + 1.0);
    }
  }
  return log_a;
}

void mh_step(std::size_t i, ImputedCounts& state, const LevyMeasure& nu,
             const IncrementData& data, SolutionCache& sols, const ProposalConfig& cfg,
             Rng& rng) {
  const std::int64_t z = data.z(i);
  if (z == 0 || z == 1) {
    throw Error(Errc::invalid_argument, "mh_step: increments with z in {0,1} are deterministic");
  }
  const SolutionSet& set = sols.get(static_cast<int>(state.m()), z);
  if (set.size() == 1) return;

  const std::size_t m = state.m();
  std::vector<double> log_rate(m);
  const double log_delta = std::log(data.delta(i));
  for (std::size_t k = 0; k < m; ++k) {
    log_rate[k] = log_delta + std::log(std::max(nu.values()[k], kRateFloor));
  }
  std::vector<double> lg(static_cast<std::size_t>(z) + 1);
  for (std::size_t t = 0; t < lg.size(); ++t) lg[t] = std::lgamma(static_cast<double>(t) + 1.0);

  const std::size_t cur = state.sol_index(i);
  const std::size_t next = mh_move(set, cur, log_rate.data(), lg.data(), cfg.pi_neighbor, rng);
  if (next != cur) state.assign(i, static_cast<std::uint32_t>(next), set.at(next));
}

ImputeTables make_impute_tables(const IncrementData& data) {
  ImputeTables t;
  t.log_delta.resize(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) t.log_delta[i] = std::log(data.delta(i));
  const std::size_t z_max = static_cast<std::size_t>(data.max_z());
  t.lgamma_table.resize(z_max + 1);
  for (std::size_t k = 0; k <= z_max; ++k) {
    t.lgamma_table[k] = std::lgamma(static_cast<double>(k) + 1.0);
  }
  return t;
}

void impute_all(ImputedCounts& state, const LevyMeasure& nu, const IncrementData& data,
                SolutionCache& sols, const ProposalConfig& cfg, const ImputeTables& tables,
                std::uint64_t seed, std::uint64_t iteration, int sweeps, int threads) {
  const std::size_t n = data.size();
  const std::size_t m = state.m();
  std::vector<double> log_nu(m);
  for (std::size_t k = 0; k < m; ++k) log_nu[k] = std::log(std::max(nu.values()[k], kRateFloor));

  auto sweep_range = [&](std::size_t begin, std::size_t end, std::span<std::int64_t> delta) {
    std::vector<double> log_rate(m);
    for (std::size_t i = begin; i < end; ++i) {
      const std::int64_t z = data.z(i);
      if (z <= 1) continue;
      const SolutionSet& set = sols.get(static_cast<int>(m), z);
      if (set.size() == 1) continue;
      for (std::size_t k = 0; k < m; ++k) log_rate[k] = tables.log_delta[i] + log_nu[k];
      Rng rng = Rng::derive(seed, streams::phase(streams::impute, iteration), i);
      std::size_t cur = state.sol_index(i);
      for (int s = 0; s < sweeps; ++s) {
        const std::size_t next = mh_move(set, cur, log_rate.data(), tables.lgamma_table.data(),
                                         cfg.pi_neighbor, rng);
        if (next != cur) {
          state.assign_deferred(i, static_cast<std::uint32_t>(next), set.at(next), delta);
          cur = next;
        }
      }
    }
  };

  if (threads <= 1) {
    std::vector<std::int64_t> delta(m, 0);
    sweep_range(0, n, delta);
    state.merge_totals(delta);
    return;
  }

  // Pre-touch every needed solution set so worker threads only read the cache.
  for (std::size_t i = 0; i < n; ++i) {
    if (data.z(i) > 1) sols.get(static_cast<int>(m), data.z(i));
  }
  const std::size_t t_count = std::min<std::size_t>(threads, n);
  std::vector<std::vector<std::int64_t>> deltas(t_count, std::vector<std::int64_t>(m, 0));
  std::vector<std::thread> pool;
  pool.reserve(t_count);
  const std::size_t chunk = (n + t_count - 1) / t_count;
  for (std::size_t t = 0; t < t_count; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    pool.emplace_back([&, begin, end, t] { sweep_range(begin, end, deltas[t]); });
  }
  for (auto& th : pool) th.join();
  for (const auto& d : deltas) state.merge_totals(d);
}

}  // namespace decomp
