#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "decomp/types.hpp"

namespace decomp {

// Compound pmf of a CPP increment with intensity lambda and jump law p:
//   q_0 = e^{-lambda},  q_k = (lambda/k) sum_{j=1..k} j p_j q_{k-j}.
CompoundPmf panjer_forward(double lambda, const BaseDistribution& p, std::size_t k_max);

// Forward recursion truncated at the smallest K with tail mass below tail_tol
// (capped); keeps the truncation honest without a caller-chosen K.
CompoundPmf panjer_forward_adaptive(double lambda, const BaseDistribution& p,
                                    double tail_tol = 1e-12, std::size_t k_cap = 10000);

struct PanjerInverse {
  double lambda;          // -log q_0
  std::vector<double> p;  // p[k-1] = p_k; entries may be negative for empirical q
};

// Inverse recursion q -> (lambda, p):
//   lambda = -log q_0,  p_k = -q_k/(q_0 log q_0) - (1/(k q_0)) sum_{j<k} j p_j q_{k-j}.
// Degenerate when q_0 is 0 (lambda undefined) or 1 (log q_0 divides).
PanjerInverse panjer_inverse(const CompoundPmf& q, std::size_t k_max);

// Convolution inverse r = q^{*(-1)}: r_0 = 1/q_0, r_k = -(1/q_0) sum_{j=1..k} q_j r_{k-j}.
InverseSequence inverse_sequence(const CompoundPmf& q);

// Bound on ||nu' - nu||_1 in terms of d = ||q' - q||_1:
// (|r|_1 d) / (1 - |r|_1 d) when |r|_1 d < 1, otherwise not applicable.
std::optional<double> stability_bound(const InverseSequence& r, double q_dist);

// Full linear convolution, out[k] = sum_j a[j] b[k-j].
std::vector<double> convolve(std::span<const double> a, std::span<const double> b);

}  // namespace decomp
