#include "decomp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "decomp/divergence.hpp"
#include "decomp/kernels.hpp"
#include "decomp/panjer.hpp"
#include "decomp/rng.hpp"

namespace decomp {

namespace {

// Divergences between the Poisson counting laws, used by the compounding
// bounds. KL(N,N') = l' - l + l log(l/l'); the second log-moment is
// E[(c + kL)^2] for k ~ Poisson(l), with E[k^2] = l(l+1).
double poisson_kl(double l, double lp) { return lp - l + l * std::log(l / lp); }

double poisson_v(double l, double lp) {
  const double c = lp - l;
  const double big_l = std::log(l / lp);
  return c * c + 2.0 * c * big_l * l + big_l * big_l * l * (l + 1.0);
}

std::vector<double> self_convolve(const std::vector<double>& p, int n) {
  std::vector<double> out{1.0};
  for (int i = 0; i < n; ++i) out = convolve(out, p);
  return out;
}

}  // namespace

CompoundInstance random_compound_instance(std::uint64_t seed, std::uint64_t index,
                                          double tail_tol) {
  Rng rng = Rng::derive(seed, 0x76657269667966ULL, index);
  CompoundInstance inst;
  const std::size_t m = 1 + rng.uniform_below(6);

  auto random_pmf = [&rng, m] {
    std::vector<double> p(m);
    double total = 0.0;
    for (double& v : p) {
      v = 0.05 + rng.uniform();  // full support keeps KL finite
      total += v;
    }
    for (double& v : p) v /= total;
    return p;
  };

  inst.p = random_pmf();
  inst.lambda = 0.2 + 2.8 * rng.uniform();
  if (rng.uniform() < 0.5) {
    // nearby pair: the stability bound needs ||q' - q||_1 < 1/||r||_1 reasonably often
    inst.lambda2 = std::max(0.05, inst.lambda * (1.0 + 0.2 * (rng.uniform() - 0.5)));
    inst.p2 = inst.p;
    for (double& v : inst.p2) v *= 1.0 + 0.2 * (rng.uniform() - 0.5);
    double total = 0.0;
    for (double v : inst.p2) total += v;
    for (double& v : inst.p2) v /= total;
  } else {
    inst.lambda2 = 0.2 + 2.8 * rng.uniform();
    inst.p2 = random_pmf();
  }

  const CompoundPmf q1 =
      panjer_forward_adaptive(inst.lambda, BaseDistribution::normalized(inst.p), tail_tol / 2);
  const CompoundPmf q2 =
      panjer_forward_adaptive(inst.lambda2, BaseDistribution::normalized(inst.p2), tail_tol / 2);
  const std::size_t k_common = std::max(q1.size(), q2.size()) - 1;
  inst.q = panjer_forward(inst.lambda, BaseDistribution::normalized(inst.p), k_common).probs();
  inst.q2 = panjer_forward(inst.lambda2, BaseDistribution::normalized(inst.p2), k_common).probs();
  return inst;
}

std::vector<InequalityCheck> standard_inequalities() {
  std::vector<InequalityCheck> checks;

  checks.push_back({"kl-compounding", [](const CompoundInstance& in) {
                      const double lhs = kl_divergence(in.q, in.q2);
                      const double rhs = in.lambda * kl_divergence(in.p, in.p2) +
                                         poisson_kl(in.lambda, in.lambda2);
                      return std::make_optional(std::make_pair(lhs, rhs));
                    }});

  // V bound assembled from the proof route: 2*E[N]-weighted n-fold V bound,
  // plus the Poisson V and KL remainders. The n-fold V bound used is
  //   V_n <= n V + n(n-1) KL^2 + (2n(n+1) - 4) KL,
  // whose Poisson mixture gives the coefficients below.
  checks.push_back({"v-compounding", [](const CompoundInstance& in) {
                      const double kl = kl_divergence(in.p, in.p2);
                      const double v = v_divergence(in.p, in.p2);
                      const double l = in.lambda, lp = in.lambda2;
                      const double lhs = v_divergence(in.q, in.q2);
                      const double rhs = 2.0 * l * v + 2.0 * l * l * kl * kl +
                                         (4.0 * l * l + 12.0 * l) * kl +
                                         2.0 * poisson_v(l, lp) + 4.0 * poisson_kl(l, lp);
                      return std::make_optional(std::make_pair(lhs, rhs));
                    }});

  checks.push_back({"hellinger-compounding", [](const CompoundInstance& in) {
                      const double lhs = hellinger(in.q, in.q2);
                      const double root_diff = std::sqrt(in.lambda) - std::sqrt(in.lambda2);
                      const double poisson_h =
                          std::sqrt(2.0 * (1.0 - std::exp(-0.5 * root_diff * root_diff)));
                      const double rhs =
                          std::sqrt(in.lambda) * hellinger(in.p, in.p2) + poisson_h;
                      return std::make_optional(std::make_pair(lhs, rhs));
                    }});

  checks.push_back({"hellinger-root-lambda", [](const CompoundInstance& in) {
                      const double lhs = hellinger(in.q, in.q2);
                      const double rhs = std::sqrt(in.lambda) * hellinger(in.p, in.p2) +
                                         std::fabs(std::sqrt(in.lambda) - std::sqrt(in.lambda2));
                      return std::make_optional(std::make_pair(lhs, rhs));
                    }});

  for (int n = 2; n <= 5; ++n) {
    checks.push_back({"nfold-kl-n" + std::to_string(n), [n](const CompoundInstance& in) {
                        const auto pn = self_convolve(in.p, n);
                        const auto pn2 = self_convolve(in.p2, n);
                        const double lhs = kl_divergence(pn, pn2);
                        const double rhs = n * kl_divergence(in.p, in.p2);
                        return std::make_optional(std::make_pair(lhs, rhs));
                      }});
    checks.push_back({"nfold-hellinger-sq-n" + std::to_string(n),
                      [n](const CompoundInstance& in) {
                        const auto pn = self_convolve(in.p, n);
                        const auto pn2 = self_convolve(in.p2, n);
                        const double h_n = hellinger(pn, pn2);
                        const double h_1 = hellinger(in.p, in.p2);
                        return std::make_optional(std::make_pair(h_n * h_n, n * h_1 * h_1));
                      }});
  }

  checks.push_back({"stability-bound", [](const CompoundInstance& in) {
                      const CompoundPmf q(in.q, 1.0 - kernels::sum(in.q.data(), in.q.size()));
                      const InverseSequence r = inverse_sequence(q);
                      const double q_dist = l1_distance(in.q, in.q2);
                      const auto bound = stability_bound(r, q_dist);
                      if (!bound) return std::optional<std::pair<double, double>>{};
                      std::vector<double> nu1(in.p), nu2(in.p2);
                      for (double& v : nu1) v *= in.lambda;
                      for (double& v : nu2) v *= in.lambda2;
                      return std::make_optional(std::make_pair(l1_distance(nu2, nu1), *bound));
                    }});

  return checks;
}

std::vector<InequalityResult> run_inequality_checks(const std::vector<InequalityCheck>& checks,
                                                    std::uint64_t seed, std::size_t instances,
                                                    double slack) {
  std::vector<InequalityResult> results;
  results.reserve(checks.size());
  for (const auto& c : checks) {
    results.push_back({c.name, 0, 0, 0, -std::numeric_limits<double>::infinity()});
  }

  for (std::size_t t = 0; t < instances; ++t) {
    const CompoundInstance inst = random_compound_instance(seed, t);
    for (std::size_t c = 0; c < checks.size(); ++c) {
      const auto outcome = checks[c].eval(inst);
      if (!outcome) {
        ++results[c].skipped;
        continue;
      }
      ++results[c].checked;
      const double margin = outcome->first - outcome->second;
      results[c].worst_margin = std::max(results[c].worst_margin, margin);
      if (margin > slack) ++results[c].violations;
    }
  }
  return results;
}

}  // namespace decomp
