#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "decomp/types.hpp"

namespace decomp {

// Frequentist plug-in benchmark: empirical increment pmf -> inverse Panjer ->
// positive part and renormalisation. Applies only to equidistant grids and
// needs at least one zero increment (q_0 > 0).
struct PluginEstimate {
  double lambda_hat = 0.0;
  std::vector<double> p_hat;   // valid pmf over {1..k_max}
  std::vector<double> nu_hat;  // lambda_hat * p_hat
  std::vector<double> raw_p;   // pre-truncation inverse output, may be negative
};

// q_hat_k = #{i : z_i = k} / n for k = 0..max z; tail mass zero.
CompoundPmf empirical_pmf(const IncrementData& data);

// k_max defaults to the largest observed increment.
PluginEstimate plugin_estimate(const IncrementData& data,
                               std::optional<std::size_t> k_max = std::nullopt);

}  // namespace decomp
