#include "decomp/kernels.hpp"

#include <atomic>
#include <cstdlib>

#include "decomp/errors.hpp"
#include "kernels_table.hpp"

namespace decomp::kernels {

using detail::KernelTable;

bool cpu_has_avx2() noexcept {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return detail::avx2_table() != nullptr && __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

struct Dispatch {
  std::atomic<const KernelTable*> table;
  std::atomic<Isa> isa;

  Dispatch() {
    const bool force_scalar = std::getenv("DECOMP_FORCE_SCALAR") != nullptr;
    if (!force_scalar && cpu_has_avx2()) {
      table.store(detail::avx2_table(), std::memory_order_relaxed);
      isa.store(Isa::avx2, std::memory_order_relaxed);
    } else {
      table.store(&detail::scalar_table(), std::memory_order_relaxed);
      isa.store(Isa::scalar, std::memory_order_relaxed);
    }
  }
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

inline const KernelTable& table() { return *dispatch().table.load(std::memory_order_relaxed); }

}  // namespace

Isa active_isa() noexcept { return dispatch().isa.load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (isa == Isa::avx2) {
    if (!cpu_has_avx2()) {
      throw Error(Errc::invalid_argument, "AVX2 kernels unavailable on this CPU/build");
    }
    dispatch().table.store(detail::avx2_table(), std::memory_order_relaxed);
  } else {
    dispatch().table.store(&detail::scalar_table(), std::memory_order_relaxed);
  }
  dispatch().isa.store(isa, std::memory_order_relaxed);
}

double dot(const double* a, const double* b, std::size_t n) noexcept {
  return table().dot(a, b, n);
}

double dot_rev(const double* a, const double* b_last, std::size_t n) noexcept {
  return table().dot_rev(a, b_last, n);
}

double sum(const double* a, std::size_t n) noexcept { return table().sum(a, n); }

double l1_norm(const double* a, std::size_t n) noexcept { return table().l1_norm(a, n); }

double l1_dist(const double* a, const double* b, std::size_t n) noexcept {
  return table().l1_dist(a, b, n);
}

double hellinger_sq(const double* a, const double* b, std::size_t n) noexcept {
  return table().hellinger_sq(a, b, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept {
  table().axpy(alpha, x, y, n);
}

}  // namespace decomp::kernels
