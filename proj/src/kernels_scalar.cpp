#include <cmath>
#include <cstddef>

#include "kernels_table.hpp"

namespace decomp::kernels::detail {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t t = 0; t < n; ++t) acc += a[t] * b[t];
  return acc;
}

double dot_rev_scalar(const double* a, const double* b_last, std::size_t n) {
  double acc = 0.0;
  for (std::size_t t = 0; t < n; ++t) acc += a[t] * b_last[-static_cast<std::ptrdiff_t>(t)];
  return acc;
}

double sum_scalar(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t t = 0; t < n; ++t) acc += a[t];
  return acc;
}

double l1_norm_scalar(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t t = 0; t < n; ++t) acc += std::fabs(a[t]);
  return acc;
}

double l1_dist_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t t = 0; t < n; ++t) acc += std::fabs(a[t] - b[t]);
  return acc;
}

double hellinger_sq_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    const double d = std::sqrt(a[t]) - std::sqrt(b[t]);
    acc += d * d;
  }
  return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t t = 0; t < n; ++t) y[t] += alpha * x[t];
}

}  // namespace

const KernelTable& scalar_table() noexcept {
  static const KernelTable table{
      dot_scalar,     dot_rev_scalar,      sum_scalar, l1_norm_scalar,
      l1_dist_scalar, hellinger_sq_scalar, axpy_scalar,
  };
  return table;
}

}  // namespace decomp::kernels::detail
