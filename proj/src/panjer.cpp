#include "decomp/panjer.hpp"

#include <algorithm>
#include <cmath>

#include "decomp/kernels.hpp"

namespace decomp {

namespace {

// w[j-1] = j * p_j, the weight sequence of both recursions
std::vector<double> size_weights(const BaseDistribution& p) {
  std::vector<double> w(p.size());
  for (std::size_t j = 1; j <= p.size(); ++j) w[j - 1] = static_cast<double>(j) * p.prob(j);
  return w;
}

}  // namespace

CompoundPmf panjer_forward(double lambda, const BaseDistribution& p, std::size_t k_max) {
  if (!(lambda > 0.0)) throw Error(Errc::invalid_argument, "panjer_forward: lambda must be > 0");
  const std::vector<double> w = size_weights(p);
  std::vector<double> q(k_max + 1, 0.0);
  q[0] = std::exp(-lambda);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const std::size_t n = std::min(k, w.size());
    q[k] = lambda / static_cast<double>(k) * kernels::dot_rev(w.data(), q.data() + (k - 1), n);
  }
  const double tail = 1.0 - kernels::sum(q.data(), q.size());
  return CompoundPmf(std::move(q), tail);
}

CompoundPmf panjer_forward_adaptive(double lambda, const BaseDistribution& p, double tail_tol,
                                    std::size_t k_cap) {
  if (!(lambda > 0.0)) throw Error(Errc::invalid_argument, "panjer_forward: lambda must be > 0");
  const std::vector<double> w = size_weights(p);
  std::vector<double> q;
  q.reserve(256);
  q.push_back(std::exp(-lambda));
  double mass = q[0];
  std::size_t k = 0;
  while (1.0 - mass >= tail_tol && k < k_cap) {
    ++k;
    const std::size_t n = std::min(k, w.size());
    q.push_back(lambda / static_cast<double>(k) *
                kernels::dot_rev(w.data(), q.data() + (k - 1), n));
    mass += q[k];
  }
  const double tail = 1.0 - kernels::sum(q.data(), q.size());
  return CompoundPmf(std::move(q), tail);
}

PanjerInverse panjer_inverse(const CompoundPmf& q, std::size_t k_max) {
  const double q0 = q.prob(0);
  if (!(q0 > 0.0)) {
    throw Error(Errc::degenerate_input, "panjer_inverse: q_0 = 0, intensity undefined");
  }
  if (q0 >= 1.0) {
    throw Error(Errc::degenerate_input, "panjer_inverse: q_0 = 1, zero-intensity boundary");
  }
  const double lambda = -std::log(q0);

  // entries of q beyond the recorded truncation are zero
  auto q_at = [&q](std::size_t k) { return k < q.size() ? q.prob(k) : 0.0; };

  PanjerInverse out;
  out.lambda = lambda;
  out.p.resize(k_max, 0.0);
  std::vector<double> w(k_max, 0.0);  // w[j-1] = j * p_j, grown alongside p
  for (std::size_t k = 1; k <= k_max; ++k) {
    // conv = sum_{j=1..k-1} j p_j q_{k-j}
    double conv = 0.0;
    if (k >= 2) {
      if (k - 1 < q.size()) {
        conv = kernels::dot_rev(w.data(), q.probs().data() + (k - 1), k - 1);
      } else {
        // window starts past the truncation; only overlapping terms contribute
        for (std::size_t j = 1; j < k; ++j) {
          const std::size_t idx = k - j;
          if (idx < q.size()) conv += w[j - 1] * q.prob(idx);
        }
      }
    }
    const double pk = q_at(k) / (q0 * lambda) - conv / (static_cast<double>(k) * q0);
    out.p[k - 1] = pk;
    w[k - 1] = static_cast<double>(k) * pk;
  }
  return out;
}

InverseSequence inverse_sequence(const CompoundPmf& q) {
  const double q0 = q.prob(0);
  if (!(q0 > 0.0)) {
    throw Error(Errc::degenerate_input, "inverse_sequence: q_0 = 0 has no convolution inverse");
  }
  std::vector<double> r(q.size(), 0.0);
  r[0] = 1.0 / q0;
  for (std::size_t k = 1; k < r.size(); ++k) {
    // sum_{j=1..k} q_j r_{k-j}
    const double conv = kernels::dot_rev(q.probs().data() + 1, r.data() + (k - 1), k);
    r[k] = -conv / q0;
  }
  return InverseSequence(std::move(r));
}

std::optional<double> stability_bound(const InverseSequence& r, double q_dist) {
  if (!(q_dist >= 0.0)) throw Error(Errc::invalid_argument, "stability_bound: distance < 0");
  const double prod = r.l1_norm() * q_dist;
  if (prod >= 1.0) return std::nullopt;
  return prod / (1.0 - prod);
}

std::vector<double> convolve(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0.0) kernels::axpy(a[i], b.data(), out.data() + i, b.size());
  }
  return out;
}

}  // namespace decomp
