#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "decomp/diophantine.hpp"
#include "decomp/rng.hpp"
#include "decomp/types.hpp"

namespace decomp {

struct ProposalConfig {
  double pi_neighbor = 0.8;  // probability of the neighbor move; remainder proposes uniformly
};

// Latent jump counts: one row mu_i = (mu_i1..mu_im) per increment, with
// sum_j j*mu_ij = z_i, plus the column totals mu_k = sum_i mu_ik that drive
// the conjugate updates.
class ImputedCounts {
 public:
  ImputedCounts(std::size_t n, std::size_t m);

  // Deterministic start: z=0 -> zero row, z=1 -> (1,0,..), z>=2 -> first
  // element of the solution set.
  static ImputedCounts initial(const IncrementData& data, std::size_t m, SolutionCache& cache);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  std::span<const std::int32_t> counts(std::size_t i) const;
  const std::vector<std::int64_t>& totals() const noexcept { return totals_; }

  std::uint32_t sol_index(std::size_t i) const { return sol_index_[i]; }

  // Replaces row i, maintaining the totals and the solution-set index.
  void assign(std::size_t i, std::uint32_t idx, std::span<const std::int32_t> row);
  // Same but without index bookkeeping (rows managed outside any solution set).
  void assign_raw(std::size_t i, std::span<const std::int32_t> row);

  // Move the per-row delta into an external accumulator instead of totals()
  // (used by the parallel sweep; deltas are merged after the join).
  void assign_deferred(std::size_t i, std::uint32_t idx, std::span<const std::int32_t> row,
                       std::span<std::int64_t> delta);
  void merge_totals(std::span<const std::int64_t> delta);

  std::vector<std::int64_t> recompute_totals() const;  // for invariant checks

 private:
  std::size_t n_, m_;
  std::vector<std::int32_t> counts_;      // n x m, row-major
  std::vector<std::uint32_t> sol_index_;  // per-row position in its solution set
  std::vector<std::int64_t> totals_;
};

// log A for a move mu -> mu_prop at time gap delta:
//   sum_k (mu^o_k - mu_k) log(delta nu_k) + sum_k [log(mu_k!) - log(mu^o_k!)].
// A zero rate with mu^o_k > mu_k rejects the move (-inf); a zero rate with
// mu_k > 0 means the chain state is already invalid.
double log_acceptance(std::span<const std::int32_t> mu, std::span<const std::int32_t> mu_prop,
                      const LevyMeasure& nu, double delta);

// One Metropolis-Hastings move for increment i (requires z_i >= 2).
void mh_step(std::size_t i, ImputedCounts& state, const LevyMeasure& nu,
             const IncrementData& data, SolutionCache& sols, const ProposalConfig& cfg, Rng& rng);

// Tables shared by every sweep of one chain.
struct ImputeTables {
  std::vector<double> log_delta;     // log Delta_i
  std::vector<double> lgamma_table;  // lgamma(0+1) .. lgamma(z_max+1)
};
ImputeTables make_impute_tables(const IncrementData& data);

// Applies `sweeps` MH moves to every increment with z_i >= 2. Increments with
// z_i in {0,1} hold their deterministic rows. Per-increment streams are
// derived from (seed, iteration, i), so the result does not depend on the
// thread count.
void impute_all(ImputedCounts& state, const LevyMeasure& nu, const IncrementData& data,
                SolutionCache& sols, const ProposalConfig& cfg, const ImputeTables& tables,
                std::uint64_t seed, std::uint64_t iteration, int sweeps = 1, int threads = 1);

}  // namespace decomp
