#pragma once

#include <cstddef>

// Low-level arithmetic kernels behind the sequence algebra (Panjer recursions,
// convolutions, norms). Scalar reference implementations and AVX2 variants are
// selected once at runtime; the two are equivalence-tested against each other.
namespace decomp::kernels {

enum class Isa { scalar, avx2 };

bool cpu_has_avx2() noexcept;

// Currently active implementation. Defaults to the widest supported ISA;
// the DECOMP_FORCE_SCALAR environment variable pins the scalar path.
Isa active_isa() noexcept;
void set_isa(Isa isa);  // throws Error{invalid_argument} if unsupported on this CPU

// sum_{t<n} a[t] * b[t]
double dot(const double* a, const double* b, std::size_t n) noexcept;

// sum_{t<n} a[t] * b_last[-t]  (second operand read backwards from b_last).
// This is the inner product of the Panjer and convolution-inverse recursions.
double dot_rev(const double* a, const double* b_last, std::size_t n) noexcept;

double sum(const double* a, std::size_t n) noexcept;
double l1_norm(const double* a, std::size_t n) noexcept;
double l1_dist(const double* a, const double* b, std::size_t n) noexcept;

// sum_{t<n} (sqrt(a[t]) - sqrt(b[t]))^2, the squared Hellinger accumulation
double hellinger_sq(const double* a, const double* b, std::size_t n) noexcept;

// y[t] += alpha * x[t]
void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept;

}  // namespace decomp::kernels
