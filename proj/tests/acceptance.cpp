// Acceptance suite: one binary, one pass/fail line per criterion, nonzero
// exit on any failure. Each criterion pins its tolerance in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "decomp/augmentation.hpp"
#include "decomp/datasets.hpp"
#include "decomp/diagnostics.hpp"
#include "decomp/diophantine.hpp"
#include "decomp/divergence.hpp"
#include "decomp/gibbs.hpp"
#include "decomp/panjer.hpp"
#include "decomp/plugin.hpp"
#include "decomp/rng.hpp"
#include "decomp/simulate.hpp"
#include "decomp/verify.hpp"
#include "support/geweke.hpp"
#include "support/oracles.hpp"

using namespace decomp;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool pass, const std::string& detail,
            double seconds) {
  std::printf("%s criterion %d: %s (%s, %.1f s)\n", pass ? "PASS" : "FAIL", number,
              label.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

void run(int number, const std::string& label,
         const std::function<std::pair<bool, std::string>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    std::tie(pass, detail) = body();
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(number, label, pass, detail, seconds);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// ---- criterion bodies ------------------------------------------------------

std::pair<bool, std::string> panjer_roundtrip() {
  Rng rng(42);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const double lambda = 0.1 + 4.9 * rng.uniform();
    const std::size_t m = 1 + rng.uniform_below(8);
    std::vector<double> w(m);
    for (double& x : w) x = 0.05 + rng.uniform();
    const BaseDistribution p = BaseDistribution::normalized(w);
    const std::size_t k_max = 10 * m;
    const CompoundPmf q = panjer_forward(lambda, p, k_max);
    const PanjerInverse inv = panjer_inverse(q, k_max);
    worst = std::max(worst, std::fabs(inv.lambda - lambda));
    for (std::size_t k = 1; k <= k_max; ++k) {
      const double expect = k <= m ? p.prob(k) : 0.0;
      worst = std::max(worst, std::fabs(inv.p[k - 1] - expect));
    }
  }
  return {worst < 1e-8, "max abs error " + fmt(worst) + " over 200 instances"};
}

std::pair<bool, std::string> diophantine_oracle() {
  for (int m = 1; m <= 6; ++m) {
    for (std::int64_t z = 0; z <= 20; ++z) {
      const SolutionSet s = enumerate_solutions(m, z);
      const auto expect = oracles::brute_force_solutions(m, z);
      if (s.size() != expect.size()) {
        return {false, "cardinality mismatch at m=" + std::to_string(m) +
                           ", z=" + std::to_string(z)};
      }
      for (std::size_t i = 0; i < s.size(); ++i) {
        const auto row = s.at(i);
        if (expect.find(std::vector<std::int32_t>(row.begin(), row.end())) == expect.end()) {
          return {false, "spurious solution at m=" + std::to_string(m) +
                             ", z=" + std::to_string(z)};
        }
      }
    }
  }
  const auto p = oracles::partition_counts_pentagonal(40);
  for (int z = 1; z <= 40; ++z) {
    if (enumerate_solutions(z, z).size() != p[z]) {
      return {false, "partition count mismatch at z=" + std::to_string(z)};
    }
  }
  return {true, "brute force m<=6,z<=20; pentagonal counts z<=40"};
}

std::pair<bool, std::string> mh_target() {
  const IncrementData data({{1.0, 4}});
  const LevyMeasure nu(std::vector<double>{1.0, 1.0, 1.0, 1.0});
  SolutionCache cache;
  const SolutionSet& s = cache.get(4, 4);
  // exact conditional: product of Poisson(1) weights over the 5 solutions
  std::vector<double> target(s.size());
  double total = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    double logw = 0.0;
    for (int j = 0; j < 4; ++j) {
      logw -= std::lgamma(static_cast<double>(s.at(i)[j]) + 1.0);
    }
    target[i] = std::exp(logw);
    total += target[i];
  }
  for (double& x : target) x /= total;

  ProposalConfig cfg;
  Rng rng(4242);
  ImputedCounts state = ImputedCounts::initial(data, 4, cache);
  std::vector<double> occupancy(s.size(), 0.0);
  const int steps = 1000000;
  for (int t = 0; t < steps; ++t) {
    mh_step(0, state, nu, data, cache, cfg, rng);
    occupancy[state.sol_index(0)] += 1.0;
  }
  for (double& o : occupancy) o /= steps;
  const double tv = 0.5 * l1_distance(occupancy, target);
  return {tv < 0.01, "TV " + fmt(tv) + " at 1e6 steps"};
}

std::pair<bool, std::string> conditional_laws() {
  const IncrementData data({{1.0, 3}, {1.0, 0}, {0.5, 2}, {1.5, 5}, {1.0, 1}});
  SolutionCache cache;
  PriorConfig prior{3, 0.4, 2.0};
  ChainState state = init_chain_state(data, prior, cache);
  state.beta = {0.5, 1.0, 2.0};
  state.gamma = 1.3;
  state.nu = LevyMeasure(std::vector<double>{0.4, 0.9, 0.2});
  const std::size_t draws = 100000;
  double worst = 0.0;

  {  // nu: Gamma(a + mu_k, 1/beta_k + T)
    const auto totals = state.imputed.totals();
    std::vector<std::vector<double>> samples(3, std::vector<double>(draws));
    ChainState work = state;
    for (std::size_t t = 0; t < draws; ++t) {
      Rng rng = Rng::derive(11, streams::phase(streams::nu, t), 0);
      update_nu(work, data, prior, rng);
      for (int k = 0; k < 3; ++k) samples[k][t] = work.nu.values()[k];
    }
    for (int k = 0; k < 3; ++k) {
      const double shape = prior.a + static_cast<double>(totals[k]);
      const double rate = 1.0 / state.beta[k] + data.total_time();
      worst = std::max(worst, oracles::ks_statistic(samples[k], [&](double x) {
                         return oracles::gamma_cdf(x, shape, rate);
                       }));
    }
  }
  {  // beta: InvGamma(a + c, gamma + nu_k)
    std::vector<std::vector<double>> samples(3, std::vector<double>(draws));
    ChainState work = state;
    for (std::size_t t = 0; t < draws; ++t) {
      Rng rng = Rng::derive(12, streams::phase(streams::beta, t), 0);
      update_beta(work, prior, rng);
      for (int k = 0; k < 3; ++k) samples[k][t] = work.beta[k];
    }
    for (int k = 0; k < 3; ++k) {
      const double scale = state.gamma + state.nu.values()[k];
      worst = std::max(worst, oracles::ks_statistic(samples[k], [&](double x) {
                         return oracles::inv_gamma_cdf(x, prior.a + prior.c, scale);
                       }));
    }
  }
  {  // gamma: Gamma(c m + 1, 1 + sum 1/beta_k)
    std::vector<double> samples(draws);
    ChainState work = state;
    double inv_beta = 0.0;
    for (double b : state.beta) inv_beta += 1.0 / b;
    for (std::size_t t = 0; t < draws; ++t) {
      Rng rng = Rng::derive(13, streams::phase(streams::gamma, t), 0);
      update_gamma(work, prior, rng);
      samples[t] = work.gamma;
    }
    worst = std::max(worst, oracles::ks_statistic(samples, [&](double x) {
                       return oracles::gamma_cdf(x, prior.c * 3.0 + 1.0, 1.0 + inv_beta);
                     }));
  }
  return {worst < 0.01, "worst KS " + fmt(worst) + " at 1e5 draws"};
}

std::pair<bool, std::string> geweke_joint() {
  PriorConfig prior{3, 0.01, 2.0};
  const std::vector<double> deltas(5, 1.0);
  const auto result = geweke::run(prior, deltas, 50000, 51);
  double worst_gap_se = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    const double gap = std::fabs(result.mean_marginal[k] - result.mean_successive[k]);
    const double se = std::sqrt(result.se_marginal[k] * result.se_marginal[k] +
                                result.se_successive[k] * result.se_successive[k]);
    worst_gap_se = std::max(worst_gap_se, gap / se);
  }
  return {worst_gap_se <= 3.0,
          "max |mean gap| of " + fmt(worst_gap_se) + " SEs over nu_1..nu_3"};
}

std::pair<bool, std::string> table1_band() {
  std::string detail;
  bool ok = true;
  for (const std::string name : {"uniform146_a", "uniform146_b", "uniform146_c"}) {
    const Preset preset = make_preset(name, 20240901);
    PriorConfig prior{default_support_cap(preset.data), 0.01, 2.0};
    SamplerConfig cfg;
    cfg.iterations = 50000;
    cfg.burn_in = 25000;
    cfg.seed = 17;
    const PosteriorSamples samples = run_chain(preset.data, prior, cfg);
    const auto summary = summarize(samples);
    std::vector<double> post_mean(summary.size());
    for (std::size_t k = 0; k < summary.size(); ++k) post_mean[k] = summary[k].mean;
    const double bayes_err = err_l1(preset.truth, post_mean);
    ok = ok && bayes_err <= 0.5;
    detail += name + " bayes " + fmt(bayes_err);

    if (name != "uniform146_c") {
      // evaluated over the same support cap as the Bayesian fit
      const PluginEstimate plug =
          plugin_estimate(preset.data, static_cast<std::size_t>(prior.m));
      const double plug_err = err_l1(preset.truth, plug.nu_hat);
      ok = ok && plug_err >= 0.05 && plug_err <= 2.0;
      detail += " plugin " + fmt(plug_err);
    }
    detail += "; ";
  }
  return {ok, detail};
}

std::pair<bool, std::string> inequality_suite() {
  const auto results = run_inequality_suite(99, 1000);
  std::size_t violations = 0;
  double worst = 0.0;
  for (const auto& r : results) {
    violations += r.violations;
    worst = std::max(worst, r.worst_margin);
  }
  return {violations == 0, std::to_string(results.size()) + " inequalities x 1000 instances, " +
                               std::to_string(violations) + " violations, worst margin " +
                               fmt(worst)};
}

std::pair<bool, std::string> horse_kick_end_to_end() {
  const IncrementData data = embedded_dataset("horse_kick");
  const PluginEstimate plug = plugin_estimate(data);
  const double expect = 0.6069694843188929;  // -log(109/200)
  const double lambda_err = std::fabs(plug.lambda_hat - expect);
  if (lambda_err >= 1e-12) {
    return {false, "plug-in lambda off by " + fmt(lambda_err)};
  }
  PriorConfig prior{default_support_cap(data), 0.01, 2.0};
  SamplerConfig cfg;
  cfg.iterations = 50000;
  cfg.burn_in = 25000;
  cfg.seed = 4;
  const PosteriorSamples samples = run_chain(data, prior, cfg);
  const auto summary = summarize(samples);
  const bool poisson_like = summary[0].mean > 3.0 * summary[1].mean;
  return {poisson_like, "lambda err " + fmt(lambda_err) + ", nu_1 mean " + fmt(summary[0].mean) +
                            " vs nu_2 mean " + fmt(summary[1].mean)};
}

std::pair<bool, std::string> simulator_fidelity() {
  auto tv_for = [](const LevyMeasure& truth) {
    const BaseDistribution p = truth.base_distribution();
    const double lambda = truth.total_mass();
    const auto deltas = uniform_grid(1000000, 1.0);
    const IncrementData data = simulate_increments(lambda, p, deltas, 321);
    const CompoundPmf q = panjer_forward_adaptive(lambda, p);
    std::vector<double> emp(q.size(), 0.0);
    double beyond = 0.0;
    for (const auto& r : data.records()) {
      if (static_cast<std::size_t>(r.z) < emp.size()) {
        emp[static_cast<std::size_t>(r.z)] += 1.0;
      } else {
        beyond += 1.0;
      }
    }
    for (double& e : emp) e /= 1e6;
    beyond /= 1e6;
    return 0.5 * (l1_distance(emp, q.probs()) + std::fabs(beyond - q.tail_mass()));
  };
  const Preset uniform = make_preset("uniform146_b", 1);
  const Preset geo = make_preset("geometric", 1, 1.0 / 3.0);
  const double tv_u = tv_for(uniform.truth);
  const double tv_g = tv_for(geo.truth);
  return {tv_u < 0.01 && tv_g < 0.01,
          "TV uniform146 " + fmt(tv_u) + ", geometric(1/3) " + fmt(tv_g) + " at 1e6 draws"};
}

}  // namespace

int main() {
  run(1, "Panjer roundtrip over 200 random instances", panjer_roundtrip);
  run(2, "Diophantine enumeration vs brute force and partition counts", diophantine_oracle);
  run(3, "MH occupation matches the exact conditional", mh_target);
  run(4, "Gibbs conditionals match closed-form Gamma/IG laws", conditional_laws);
  run(5, "Geweke joint-distribution agreement", geweke_joint);
  run(6, "error bands on settings (a)-(c), quick profile", table1_band);
  run(7, "compounding inequality suite, 1000 instances", inequality_suite);
  run(8, "horse-kick end-to-end", horse_kick_end_to_end);
  run(9, "simulator fidelity vs forward recursion", simulator_fidelity);
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all 9 criteria passed\n");
  return 0;
}
