#include "decomp/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "decomp/kernels.hpp"

namespace decomp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <typename Term>
double accumulate_log_ratio(std::span<const double> a, std::span<const double> b, Term term) {
  const std::size_t n = std::max(a.size(), b.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ai = i < a.size() ? a[i] : 0.0;
    if (ai <= 0.0) continue;  // 0 log 0 = 0
    const double bi = i < b.size() ? b[i] : 0.0;
    if (bi <= 0.0) return kInf;
    acc += term(ai, std::log(ai / bi));
  }
  return acc;
}

}  // namespace

double kl_divergence(std::span<const double> a, std::span<const double> b) {
  return accumulate_log_ratio(a, b, [](double ai, double lr) { return ai * lr; });
}

double v_divergence(std::span<const double> a, std::span<const double> b) {
  return accumulate_log_ratio(a, b, [](double ai, double lr) { return ai * lr * lr; });
}

double hellinger(std::span<const double> a, std::span<const double> b) {
  const std::size_t common = std::min(a.size(), b.size());
  double sq = kernels::hellinger_sq(a.data(), b.data(), common);
  // beyond the common length one side is zero, so each term is just the mass
  for (std::size_t i = common; i < a.size(); ++i) sq += a[i];
  for (std::size_t i = common; i < b.size(); ++i) sq += b[i];
  return std::sqrt(sq);
}

double l1_distance(std::span<const double> a, std::span<const double> b) {
  const std::size_t common = std::min(a.size(), b.size());
  double acc = kernels::l1_dist(a.data(), b.data(), common);
  if (a.size() > common) acc += kernels::l1_norm(a.data() + common, a.size() - common);
  if (b.size() > common) acc += kernels::l1_norm(b.data() + common, b.size() - common);
  return acc;
}

}  // namespace decomp
