#include "decomp/plugin.hpp"

#include <algorithm>
#include <cmath>

#include "decomp/panjer.hpp"

namespace decomp {

CompoundPmf empirical_pmf(const IncrementData& data) {
  if (!data.equidistant()) {
    throw Error(Errc::not_applicable,
                "plug-in estimator requires equidistant observation times");
  }
  const std::int64_t z_max = data.max_z();
  std::vector<double> counts(static_cast<std::size_t>(z_max) + 1, 0.0);
  for (const auto& r : data.records()) counts[static_cast<std::size_t>(r.z)] += 1.0;
  if (counts[0] == 0.0) {
    throw Error(Errc::breakdown, "plug-in estimator breaks down: no zero increments observed");
  }
  const double n = static_cast<double>(data.size());
  for (double& c : counts) c /= n;
  return CompoundPmf(std::move(counts), 0.0);
}

PluginEstimate plugin_estimate(const IncrementData& data, std::optional<std::size_t> k_max) {
  const CompoundPmf q = empirical_pmf(data);
  const std::size_t k = k_max.value_or(q.size() - 1);
  if (k == 0 || q.prob(0) >= 1.0) {
    throw Error(Errc::degenerate_input,
                "plug-in estimator degenerate: all increments are zero");
  }
  const PanjerInverse inv = panjer_inverse(q, k);

  PluginEstimate out;
  out.lambda_hat = inv.lambda;
  out.raw_p = inv.p;
  out.p_hat.resize(k, 0.0);
  double positive_mass = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    out.p_hat[j] = std::max(inv.p[j], 0.0);
    positive_mass += out.p_hat[j];
  }
  if (positive_mass <= 0.0) {
    throw Error(Errc::degenerate_input, "plug-in estimator degenerate: no positive mass");
  }
  for (double& v : out.p_hat) v /= positive_mass;
  out.nu_hat.resize(k);
  for (std::size_t j = 0; j < k; ++j) out.nu_hat[j] = out.lambda_hat * out.p_hat[j];
  return out;
}

}  // namespace decomp
