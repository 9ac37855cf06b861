#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "decomp/types.hpp"

namespace decomp {

// One randomized test instance: two compound-Poisson laws on a common
// truncated support with both tail masses below the enforced bound.
struct CompoundInstance {
  double lambda = 0.0, lambda2 = 0.0;
  std::vector<double> p, p2;  // jump pmfs on {1..m}, full support
  std::vector<double> q, q2;  // truncated compound pmfs, common length
};

// Evaluates one inequality on an instance; returns (lhs, rhs) or nullopt to
// skip. A violation is lhs > rhs + slack.
struct InequalityCheck {
  std::string name;
  std::function<std::optional<std::pair<double, double>>(const CompoundInstance&)> eval;
};

struct InequalityResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t violations = 0;
  double worst_margin = 0.0;  // max over instances of lhs - rhs
};

// The built-in checks: compounding bounds for KL, V and Hellinger, the n-fold
// convolution bounds for KL and squared Hellinger (n <= 5), and the
// convolution-inverse stability bound.
std::vector<InequalityCheck> standard_inequalities();

CompoundInstance random_compound_instance(std::uint64_t seed, std::uint64_t index,
                                          double tail_tol = 1e-10);

std::vector<InequalityResult> run_inequality_checks(const std::vector<InequalityCheck>& checks,
                                                    std::uint64_t seed, std::size_t instances,
                                                    double slack = 1e-8);

inline std::vector<InequalityResult> run_inequality_suite(std::uint64_t seed,
                                                          std::size_t instances,
                                                          double slack = 1e-8) {
  return run_inequality_checks(standard_inequalities(), seed, instances, slack);
}

}  // namespace decomp
