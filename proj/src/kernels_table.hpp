#pragma once

#include <cstddef>

namespace decomp::kernels::detail {

struct KernelTable {
  double (*dot)(const double*, const double*, std::size_t);
  double (*dot_rev)(const double*, const double*, std::size_t);
  double (*sum)(const double*, std::size_t);
  double (*l1_norm)(const double*, std::size_t);
  double (*l1_dist)(const double*, const double*, std::size_t);
  double (*hellinger_sq)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
};

const KernelTable& scalar_table() noexcept;

// Null when the binary or the CPU lacks AVX2.
const KernelTable* avx2_table() noexcept;

}  // namespace decomp::kernels::detail
